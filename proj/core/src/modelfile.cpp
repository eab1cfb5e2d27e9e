#include "sullivan/modelfile.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace sullivan {

std::string ParseDiagnostic::render() const {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? " or " : "") << expected[i];
        os << ")";
    }
    return os.str();
}

bool ModelDocument::operator==(const ModelDocument& other) const {
    auto entry_eq = [](const Entry& a, const Entry& b) {
        return a.kind == b.kind && a.name == b.name;
    };
    if (order.size() != other.order.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!entry_eq(order[i], other.order[i])) return false;
    return title == other.title && tag == other.tag && algebras == other.algebras &&
           extensions == other.extensions && morphisms == other.morphisms &&
           extension_base == other.extension_base && morphism_ends == other.morphism_ends;
}

namespace {

const char* kReserved[] = {"title", "tag", "algebra", "extension", "morphism",
                           "over",  "gen", "d",   "map"};

bool is_reserved(const std::string& s) {
    return std::find(std::begin(kReserved), std::end(kReserved), s) != std::end(kReserved);
}

struct Token {
    enum class Kind { ident, number, symbol, end } kind = Kind::end;
    std::string text;
    int line = 0, col = 0;
};

struct LineTokens {
    std::vector<Token> tokens;  // terminated by an end token
    bool error = false;
};

LineTokens tokenize_line(const std::string& text, int line_no,
                         std::vector<ParseDiagnostic>& errors) {
    LineTokens out;
    std::size_t i = 0;
    auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.line = line_no;
        t.col = col(i);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                    text[j] == '\''))
                ++j;
            t.kind = Token::Kind::ident;
            t.text = text.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Token::Kind::number;
            t.text = text.substr(i, j - i);
            i = j;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            t.kind = Token::Kind::symbol;
            t.text = "->";
            i += 2;
        } else if (std::string(":=+-*^/,").find(c) != std::string::npos) {
            t.kind = Token::Kind::symbol;
            t.text = std::string(1, c);
            ++i;
        } else {
            errors.push_back({line_no, col(i),
                              std::string("unexpected character '") + c + "'",
                              {}});
            out.error = true;
            ++i;
            continue;
        }
        out.tokens.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::end;
    end.line = line_no;
    end.col = col(text.size());
    out.tokens.push_back(end);
    return out;
}

/// Recursive-descent polynomial parser over a token stream.
class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, std::size_t start, const GenSet& gens,
               std::vector<ParseDiagnostic>& errors)
        : toks_(toks), pos_(start), gens_(gens), errors_(errors) {}

    std::optional<Polynomial> parse_expr() {
        auto value = parse_signed_term();
        if (!value) return std::nullopt;
        while (peek().kind == Token::Kind::symbol &&
               (peek().text == "+" || peek().text == "-")) {
            bool minus = next().text == "-";
            auto t = parse_term();
            if (!t) return std::nullopt;
            *value = minus ? *value - *t : *value + *t;
        }
        if (peek().kind != Token::Kind::end) {
            error(peek(), "trailing input after polynomial", {"+", "-", "end of line"});
            return std::nullopt;
        }
        return value;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    void error(const Token& at, const std::string& msg, std::vector<std::string> expected) {
        errors_.push_back({at.line, at.col, msg, std::move(expected)});
    }

    std::optional<Polynomial> parse_signed_term() {
        bool minus = false;
        if (peek().kind == Token::Kind::symbol && peek().text == "-") {
            minus = true;
            next();
        }
        auto t = parse_term();
        if (!t) return std::nullopt;
        return minus ? -*t : *t;
    }

    std::optional<Polynomial> parse_term() {
        auto f = parse_factor();
        if (!f) return std::nullopt;
        Polynomial value = *f;
        while (peek().kind == Token::Kind::symbol && peek().text == "*") {
            next();
            auto g = parse_factor();
            if (!g) return std::nullopt;
            value = value * *g;
        }
        return value;
    }

    std::optional<Polynomial> parse_factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::number) {
            next();
            Integer num(t.text);
            if (peek().kind == Token::Kind::symbol && peek().text == "/") {
                next();
                if (peek().kind != Token::Kind::number) {
                    error(peek(), "denominator must be an integer", {"integer"});
                    return std::nullopt;
                }
                Integer den(next().text);
                if (den == 0) {
                    error(t, "zero denominator", {});
                    return std::nullopt;
                }
                return Polynomial::constant(gens_, Rational(num, den));
            }
            return Polynomial::constant(gens_, Rational(num));
        }
        if (t.kind == Token::Kind::ident) {
            next();
            int idx = gens_.index_of(t.text);
            if (idx < 0) {
                error(t, "unknown generator '" + t.text + "'", {});
                return std::nullopt;
            }
            Polynomial p = Polynomial::gen(gens_, static_cast<std::size_t>(idx));
            if (peek().kind == Token::Kind::symbol && peek().text == "^") {
                next();
                if (peek().kind != Token::Kind::number) {
                    error(peek(), "exponent must be a positive integer", {"integer"});
                    return std::nullopt;
                }
                const Token& e = next();
                long exp = std::stol(e.text);
                if (exp < 1) {
                    error(e, "exponent must be >= 1", {});
                    return std::nullopt;
                }
                p = p.pow(static_cast<std::uint32_t>(exp));
            }
            return p;
        }
        error(t, "expected a coefficient or generator", {"integer", "identifier"});
        return std::nullopt;
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    const GenSet& gens_;
    std::vector<ParseDiagnostic>& errors_;
};

struct PendingGen {
    std::string name;
    int degree = 0;
    Token at;
};

struct PendingLine {
    std::string target;  // generator being assigned
    Token at;
    std::vector<Token> rhs;  // tokens after '=' incl. end
};

struct PendingBlock {
    enum class Kind { none, algebra, extension, morphism } kind = Kind::none;
    std::string name;
    Token at;
    std::string over;                               // extensions
    std::string source, target;                     // morphisms
    std::vector<PendingGen> gens;
    std::vector<PendingLine> assignments;           // d or map lines
};

class DocumentBuilder {
  public:
    DocumentBuilder(ParseResult& result) : result_(result) {}

    void finish_block(PendingBlock& block) {
        switch (block.kind) {
            case PendingBlock::Kind::algebra: build_algebra(block); break;
            case PendingBlock::Kind::extension: build_extension(block); break;
            case PendingBlock::Kind::morphism: build_morphism(block); break;
            default: break;
        }
        block = PendingBlock{};
    }

  private:
    void error(const Token& at, const std::string& msg) {
        result_.errors.push_back({at.line, at.col, msg, {}});
    }
    void warn(const Token& at, const std::string& msg) {
        result_.warnings.push_back({at.line, at.col, msg, {}});
    }

    bool name_taken(const std::string& n) const {
        const auto& doc = result_.document;
        return doc.algebras.count(n) || doc.extensions.count(n) || doc.morphisms.count(n);
    }

    std::optional<GenSet> build_gens(const PendingBlock& block, const GenSet* prefix) {
        std::vector<Generator> gens;
        if (prefix)
            for (std::size_t i = 0; i < prefix->size(); ++i) gens.push_back(prefix->gen(i));
        bool ok = true;
        for (const auto& g : block.gens) {
            if (is_reserved(g.name)) {
                error(g.at, "'" + g.name + "' is a reserved word");
                ok = false;
                continue;
            }
            if (g.degree < 1) {
                error(g.at, "generator degree must be >= 1");
                ok = false;
                continue;
            }
            bool dup = std::any_of(gens.begin(), gens.end(),
                                   [&](const Generator& h) { return h.name == g.name; });
            if (dup) {
                error(g.at, "duplicate generator '" + g.name + "'");
                ok = false;
                continue;
            }
            gens.push_back({g.name, g.degree});
        }
        if (!ok) return std::nullopt;
        return GenSet(gens);
    }

    /// Evaluate d/map assignments against a generator set; returns values
    /// indexed by generator, with degree checking relative to `shift`
    /// (1 for differentials, 0 for morphism images).
    std::optional<std::vector<Polynomial>> evaluate(const PendingBlock& block,
                                                    const GenSet& value_domain,
                                                    const GenSet& key_domain, int shift,
                                                    std::vector<bool>& assigned) {
        std::vector<Polynomial> values(key_domain.size(), Polynomial(value_domain));
        assigned.assign(key_domain.size(), false);
        bool ok = true;
        for (const auto& line : block.assignments) {
            int idx = key_domain.index_of(line.target);
            if (idx < 0) {
                error(line.at, "unknown generator '" + line.target + "'");
                ok = false;
                continue;
            }
            ExprParser ep(line.rhs, 0, value_domain, result_.errors);
            auto value = ep.parse_expr();
            if (!value) {
                ok = false;
                continue;
            }
            if (assigned[static_cast<std::size_t>(idx)]) {
                error(line.at, "'" + line.target + "' assigned twice");
                ok = false;
                continue;
            }
            if (!value->is_zero()) {
                auto hd = value->homogeneous_degree();
                int want = key_domain.degree(static_cast<std::size_t>(idx)) + shift;
                if (!hd || *hd != want) {
                    error(line.at, "value for '" + line.target +
                                       "' must be homogeneous of degree " +
                                       std::to_string(want));
                    ok = false;
                    continue;
                }
            } else {
                bool mentions_gen = std::any_of(
                    line.rhs.begin(), line.rhs.end(),
                    [](const Token& t) { return t.kind == Token::Kind::ident; });
                if (mentions_gen)
                    warn(line.at, "value for '" + line.target +
                                      "' is 0 after normalization (odd square?)");
            }
            values[static_cast<std::size_t>(idx)] = std::move(*value);
            assigned[static_cast<std::size_t>(idx)] = true;
        }
        if (!ok) return std::nullopt;
        return values;
    }

    void build_algebra(PendingBlock& block) {
        if (name_taken(block.name)) {
            error(block.at, "name '" + block.name + "' already used");
            return;
        }
        auto gens = build_gens(block, nullptr);
        if (!gens) return;
        std::vector<bool> assigned;
        auto d = evaluate(block, *gens, *gens, 1, assigned);
        if (!d) return;
        try {
            result_.document.algebras.emplace(block.name,
                                              SullivanAlgebra(*gens, std::move(*d)));
            result_.document.order.push_back(
                {ModelDocument::Entry::Kind::algebra, block.name});
        } catch (const Error& e) {
            error(block.at, e.what());
        }
    }

    void build_extension(PendingBlock& block) {
        if (name_taken(block.name)) {
            error(block.at, "name '" + block.name + "' already used");
            return;
        }
        auto base_it = result_.document.algebras.find(block.over);
        if (base_it == result_.document.algebras.end()) {
            error(block.at, "unknown base algebra '" + block.over + "'");
            return;
        }
        const SullivanAlgebra& base = base_it->second;
        auto total_gens = build_gens(block, &base.gens());
        if (!total_gens) return;
        std::vector<bool> assigned;
        auto values = evaluate(block, *total_gens, *total_gens, 1, assigned);
        if (!values) return;
        // Base differentials are inherited, never re-declared.
        bool ok = true;
        for (std::size_t i = 0; i < base.gen_count(); ++i) {
            if (assigned[i]) {
                error(block.at, "extension re-declares the differential of base generator '" +
                                    total_gens->name(i) + "'");
                ok = false;
            }
            Polynomial lift(*total_gens);
            for (const auto& [m, c] : base.d_of(i).terms()) lift.add_term(m, c);
            (*values)[i] = std::move(lift);
        }
        if (!ok) return;
        std::vector<Generator> fiber;
        for (std::size_t i = base.gen_count(); i < total_gens->size(); ++i)
            fiber.push_back(total_gens->gen(i));
        try {
            KsExtension ks(base, std::move(fiber), std::move(*values));
            result_.document.extensions.emplace(block.name, std::move(ks));
            result_.document.extension_base.emplace(block.name, block.over);
            result_.document.order.push_back(
                {ModelDocument::Entry::Kind::extension, block.name});
        } catch (const Error& e) {
            error(block.at, e.what());
        }
    }

    void build_morphism(PendingBlock& block) {
        if (name_taken(block.name)) {
            error(block.at, "name '" + block.name + "' already used");
            return;
        }
        auto src_it = result_.document.algebras.find(block.source);
        auto tgt_it = result_.document.algebras.find(block.target);
        if (src_it == result_.document.algebras.end()) {
            error(block.at, "unknown source algebra '" + block.source + "'");
            return;
        }
        if (tgt_it == result_.document.algebras.end()) {
            error(block.at, "unknown target algebra '" + block.target + "'");
            return;
        }
        if (!block.gens.empty())
            error(block.gens.front().at, "morphism blocks do not declare generators");
        std::vector<bool> assigned;
        auto images = evaluate(block, tgt_it->second.gens(), src_it->second.gens(), 0,
                               assigned);
        if (!images) return;
        std::vector<std::string> defaulted;
        for (std::size_t i = 0; i < assigned.size(); ++i)
            if (!assigned[i]) defaulted.push_back(src_it->second.gens().name(i));
        if (!defaulted.empty()) {
            std::string names;
            for (const auto& n : defaulted) names += (names.empty() ? "" : ", ") + n;
            warn(block.at, "unmapped generators default to 0: " + names);
        }
        try {
            Morphism phi(src_it->second, tgt_it->second, std::move(*images));
            auto rep = validate(phi);
            if (!rep.valid()) {
                for (const auto& f : rep.findings)
                    if (f.severity == ValidationFinding::Severity::error)
                        error(block.at, "morphism '" + block.name + "': " + f.message);
                return;
            }
            result_.document.morphisms.emplace(block.name, std::move(phi));
            result_.document.morphism_ends.emplace(block.name,
                                                   std::make_pair(block.source, block.target));
            result_.document.order.push_back(
                {ModelDocument::Entry::Kind::morphism, block.name});
        } catch (const Error& e) {
            error(block.at, e.what());
        }
    }

    ParseResult& result_;
};

}  // namespace

ParseResult parse(const std::string& text) {
    ParseResult result;
    DocumentBuilder builder(result);
    PendingBlock block;

    std::istringstream input(text);
    std::string raw;
    int line_no = 0;
    auto expect_sym = [&](const std::vector<Token>& toks, std::size_t i, const char* sym,
                          std::vector<std::string> expected) -> bool {
        if (i < toks.size() && toks[i].kind == Token::Kind::symbol && toks[i].text == sym)
            return true;
        const Token& at = i < toks.size() ? toks[i] : toks.back();
        result.errors.push_back({at.line, at.col, "expected '" + std::string(sym) + "'",
                                 std::move(expected)});
        return false;
    };
    auto expect_ident = [&](const std::vector<Token>& toks, std::size_t i,
                            const char* what) -> bool {
        if (i < toks.size() && toks[i].kind == Token::Kind::ident) return true;
        const Token& at = i < toks.size() ? toks[i] : toks.back();
        result.errors.push_back({at.line, at.col, std::string("expected ") + what,
                                 std::vector<std::string>{"identifier"}});
        return false;
    };

    while (std::getline(input, raw)) {
        ++line_no;
        // Title and tag lines carry free text; take them before tokenizing.
        std::size_t first = raw.find_first_not_of(" \t");
        auto free_text_line = [&](const char* kw) -> std::optional<std::string> {
            std::size_t len = std::strlen(kw);
            if (first == std::string::npos || raw.compare(first, len, kw) != 0)
                return std::nullopt;
            if (first + len != raw.size() &&
                !std::isspace(static_cast<unsigned char>(raw[first + len])))
                return std::nullopt;
            std::string t = raw.substr(first + len);
            while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
                t.erase(t.begin());
            while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
            return t;
        };
        if (auto t = free_text_line("title")) {
            result.document.title = *t;
            continue;
        }
        if (auto t = free_text_line("tag")) {
            result.document.tag = *t;
            continue;
        }
        auto lt = tokenize_line(raw, line_no, result.errors);
        const auto& toks = lt.tokens;
        if (toks.front().kind == Token::Kind::end) continue;
        const Token& head = toks.front();
        if (head.kind != Token::Kind::ident) {
            result.errors.push_back({head.line, head.col, "unexpected line start",
                                     {"algebra", "extension", "morphism", "gen", "d", "map"}});
            continue;
        }
        const std::string& kw = head.text;
        if (kw == "algebra" || kw == "extension" || kw == "morphism") {
            builder.finish_block(block);
            if (!expect_ident(toks, 1, "a block name")) continue;
            if (is_reserved(toks[1].text)) {
                result.errors.push_back(
                    {toks[1].line, toks[1].col, "'" + toks[1].text + "' is a reserved word", {}});
                continue;
            }
            block.name = toks[1].text;
            block.at = toks[1];
            if (kw == "algebra") {
                block.kind = PendingBlock::Kind::algebra;
            } else if (kw == "extension") {
                block.kind = PendingBlock::Kind::extension;
                if (toks.size() < 3 || toks[2].kind != Token::Kind::ident ||
                    toks[2].text != "over") {
                    const Token& at = toks.size() > 2 ? toks[2] : toks.back();
                    result.errors.push_back({at.line, at.col, "expected 'over'", {"over"}});
                    block.kind = PendingBlock::Kind::none;
                    continue;
                }
                if (!expect_ident(toks, 3, "a base algebra name")) {
                    block.kind = PendingBlock::Kind::none;
                    continue;
                }
                block.over = toks[3].text;
            } else {
                block.kind = PendingBlock::Kind::morphism;
                if (!expect_sym(toks, 2, ":", {":"}) || !expect_ident(toks, 3, "an algebra") ||
                    !expect_sym(toks, 4, "->", {"->"}) || !expect_ident(toks, 5, "an algebra")) {
                    block.kind = PendingBlock::Kind::none;
                    continue;
                }
                block.source = toks[3].text;
                block.target = toks[5].text;
            }
            continue;
        }
        if (kw == "gen") {
            if (block.kind == PendingBlock::Kind::none) {
                result.errors.push_back({head.line, head.col, "'gen' outside a block", {}});
                continue;
            }
            if (!expect_ident(toks, 1, "a generator name")) continue;
            if (!expect_sym(toks, 2, ":", {":"})) continue;
            if (toks.size() < 4 || toks[3].kind != Token::Kind::number) {
                const Token& at = toks.size() > 3 ? toks[3] : toks.back();
                result.errors.push_back(
                    {at.line, at.col, "expected a degree", {"positive integer"}});
                continue;
            }
            PendingGen g;
            g.name = toks[1].text;
            g.degree = std::stoi(toks[3].text);
            g.at = toks[1];
            block.gens.push_back(std::move(g));
            continue;
        }
        if (kw == "d" || kw == "map") {
            if (block.kind == PendingBlock::Kind::none) {
                result.errors.push_back(
                    {head.line, head.col, "'" + kw + "' outside a block", {}});
                continue;
            }
            bool want_map = block.kind == PendingBlock::Kind::morphism;
            if (want_map != (kw == "map")) {
                result.errors.push_back({head.line, head.col,
                                         want_map ? "morphism blocks use 'map' lines"
                                                  : "algebra blocks use 'd' lines",
                                         {}});
                continue;
            }
            if (!expect_ident(toks, 1, "a generator name")) continue;
            if (!expect_sym(toks, 2, "=", {"="})) continue;
            PendingLine pl;
            pl.target = toks[1].text;
            pl.at = toks[1];
            pl.rhs.assign(toks.begin() + 3, toks.end());
            block.assignments.push_back(std::move(pl));
            continue;
        }
        result.errors.push_back({head.line, head.col, "unknown directive '" + kw + "'",
                                 {"algebra", "extension", "morphism", "gen", "d", "map"}});
    }
    builder.finish_block(block);
    return result;
}

std::string polynomial_text(const Polynomial& p) { return p.to_string(); }

std::string serialize(const ModelDocument& doc) {
    std::ostringstream os;
    if (!doc.title.empty()) os << "title " << doc.title << "\n";
    if (!doc.tag.empty()) os << "tag " << doc.tag << "\n";
    if (!doc.title.empty() || !doc.tag.empty()) os << "\n";
    bool first = true;
    for (const auto& entry : doc.order) {
        if (!first) os << "\n";
        first = false;
        if (entry.kind == ModelDocument::Entry::Kind::algebra) {
            const auto& alg = doc.algebras.at(entry.name);
            os << "algebra " << entry.name << "\n";
            for (std::size_t i = 0; i < alg.gen_count(); ++i)
                os << "  gen " << alg.gens().name(i) << " : " << alg.gens().degree(i) << "\n";
            for (std::size_t i = 0; i < alg.gen_count(); ++i)
                if (!alg.d_of(i).is_zero())
                    os << "  d " << alg.gens().name(i) << " = "
                       << polynomial_text(alg.d_of(i)) << "\n";
        } else if (entry.kind == ModelDocument::Entry::Kind::extension) {
            const auto& ks = doc.extensions.at(entry.name);
            os << "extension " << entry.name << " over " << doc.extension_base.at(entry.name)
               << "\n";
            const auto& total = ks.total();
            for (std::size_t i = ks.base_count(); i < total.gen_count(); ++i)
                os << "  gen " << total.gens().name(i) << " : " << total.gens().degree(i)
                   << "\n";
            for (std::size_t i = ks.base_count(); i < total.gen_count(); ++i)
                if (!total.d_of(i).is_zero())
                    os << "  d " << total.gens().name(i) << " = "
                       << polynomial_text(total.d_of(i)) << "\n";
        } else {
            const auto& phi = doc.morphisms.at(entry.name);
            const auto& ends = doc.morphism_ends.at(entry.name);
            os << "morphism " << entry.name << " : " << ends.first << " -> " << ends.second
               << "\n";
            for (std::size_t i = 0; i < phi.source().gen_count(); ++i)
                os << "  map " << phi.source().gens().name(i) << " = "
                   << polynomial_text(phi.image_of(i)) << "\n";
        }
    }
    return os.str();
}

}  // namespace sullivan
