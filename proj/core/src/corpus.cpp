#include "sullivan/corpus.hpp"

#include "sullivan/gottlieb.hpp"
#include "sullivan/modelfile.hpp"
#include "sullivan/render.hpp"
#include "sullivan/splitting.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace sullivan {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

struct CheckContext {
    const ModelDocument& doc;
    std::string fixture;
    std::vector<CorpusCheckResult>& rows;

    void emit(const std::string& check, const std::string& expected,
              const std::string& actual) {
        rows.push_back({fixture, check, expected, actual, expected == actual});
    }
    void fail(const std::string& check, const std::string& expected,
              const std::string& actual) {
        rows.push_back({fixture, check, expected, actual, false});
    }
};

const SullivanAlgebra* find_algebra(const ModelDocument& doc, const std::string& name) {
    auto it = doc.algebras.find(name);
    return it == doc.algebras.end() ? nullptr : &it->second;
}

const KsExtension* find_extension(const ModelDocument& doc, const std::string& name) {
    auto it = doc.extensions.find(name);
    return it == doc.extensions.end() ? nullptr : &it->second;
}

/// Span of the named generator duals inside the degree-d dual slice.
SubspaceBasis named_span(const GenSet& gens, int degree,
                         const std::vector<std::string>& names) {
    auto ambient = gens.indices_of_degree(degree);
    std::vector<RationalVector> vectors;
    for (const auto& n : names) {
        int idx = gens.index_of(n);
        if (idx < 0) throw Error("unknown generator '" + n + "' in expectation");
        RationalVector v(ambient.size(), Rational(0));
        bool found = false;
        for (std::size_t k = 0; k < ambient.size(); ++k)
            if (ambient[k] == static_cast<std::size_t>(idx)) {
                v[k] = 1;
                found = true;
            }
        if (!found) throw Error("generator '" + n + "' is not of degree " +
                                std::to_string(degree));
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis::span(ambient.size(), vectors);
}

void check_classes(CheckContext& ctx, const std::string& label, const DualClasses& got,
                   const GenSet& gens, const std::string& dim_expected,
                   const std::vector<std::string>& basis_names) {
    std::string actual = std::to_string(got.dim());
    if (!basis_names.empty()) {
        auto expected_span = named_span(gens, got.degree, basis_names);
        bool span_ok = got.space == expected_span.sum(got.boundaries) &&
                       got.dim() == basis_names.size();
        actual += span_ok ? " basis-match" : " basis-mismatch(" +
                                                 render_classes(got, gens) + ")";
        ctx.emit(label, dim_expected + " basis-match", actual);
    } else {
        ctx.emit(label, dim_expected, actual);
    }
}

void run_check(CheckContext& ctx, const std::vector<std::string>& toks) {
    const std::string& kind = toks[0];
    auto eq = std::find(toks.begin(), toks.end(), "=");
    if (eq == toks.end()) {
        ctx.fail(kind, "well-formed check", "missing '='");
        return;
    }
    std::vector<std::string> lhs(toks.begin() + 1, eq);
    std::vector<std::string> rhs(eq + 1, toks.end());
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& t : v) s += (s.empty() ? "" : " ") + t;
        return s;
    };
    std::string label = kind + " " + join(lhs);

    try {
        if (kind == "o" || kind == "rgmap" || kind == "wmap" || kind == "obasis") {
            const KsExtension* ks = find_extension(ctx.doc, lhs.at(0));
            if (!ks) {
                ctx.fail(label, join(rhs), "unknown extension");
                return;
            }
            if (kind == "o") {
                ObstructionOptions opts;
                auto rep = obstruction_group(*ks, opts);
                std::string actual = std::to_string(rep.o);
                if (rep.cross_check_mismatch) actual += " cross-check-mismatch";
                ctx.emit(label, join(rhs), actual);
            } else if (kind == "obasis") {
                auto rep = obstruction_group(*ks);
                std::vector<std::string> names;
                for (const auto& d : rep.diagnostics)
                    if (d.qualifies) names.push_back(d.name);
                std::sort(names.begin(), names.end());
                auto want = rhs;
                std::sort(want.begin(), want.end());
                ctx.emit(label, join(want), join(names));
            } else if (kind == "rgmap") {
                ctx.emit(label, join(rhs), is_rg_map(*ks) ? "true" : "false");
            } else {
                auto rep = is_w_map(*ks);
                ctx.emit(label, join(rhs), rep.verdict ? "true" : "false");
            }
            return;
        }
        if (kind == "rgmap_morphism") {
            auto it = ctx.doc.morphisms.find(lhs.at(0));
            if (it == ctx.doc.morphisms.end()) {
                ctx.fail(label, join(rhs), "unknown morphism");
                return;
            }
            ctx.emit(label, join(rhs), is_rg_map(it->second) ? "true" : "false");
            return;
        }
        if (kind == "gottlieb" || kind == "center" || kind == "cohom") {
            const SullivanAlgebra* alg = find_algebra(ctx.doc, lhs.at(0));
            if (!alg) {
                ctx.fail(label, join(rhs), "unknown algebra");
                return;
            }
            if (lhs.size() < 3 || lhs.at(1) != "@") {
                ctx.fail(label, join(rhs), "missing '@ degree'");
                return;
            }
            int degree = std::stoi(lhs.at(2));
            std::vector<std::string> basis_names;
            std::string dim_expected = rhs.at(0);
            auto b = std::find(rhs.begin(), rhs.end(), "basis");
            if (b != rhs.end()) basis_names.assign(b + 1, rhs.end());
            if (kind == "gottlieb") {
                auto got = gottlieb_group(*alg, degree);
                check_classes(ctx, label, got, alg->gens(), dim_expected, basis_names);
            } else if (kind == "center") {
                auto got = homotopy_center(*alg, degree);
                DualClasses cls;
                cls.degree = degree;
                cls.ambient_gens = alg->gens().indices_of_degree(degree);
                cls.space = got;
                cls.boundaries = SubspaceBasis(got.ambient());
                check_classes(ctx, label, cls, alg->gens(), dim_expected, basis_names);
            } else {
                auto coh = cohomology(*alg, degree);
                ctx.emit(label, dim_expected,
                         std::to_string(coh.dims.at(static_cast<std::size_t>(degree))));
            }
            return;
        }
        if (kind == "evalsub" || kind == "evalsub_total") {
            const KsExtension* ks = find_extension(ctx.doc, lhs.at(0));
            if (!ks) {
                ctx.fail(label, join(rhs), "unknown extension");
                return;
            }
            if (kind == "evalsub_total") {
                auto graded = evaluation_subgroup(*ks, 1, ks->base().gens().max_degree());
                ctx.emit(label, join(rhs), std::to_string(graded.total_dim()));
                return;
            }
            int degree = std::stoi(lhs.at(2));
            std::vector<std::string> basis_names;
            auto b = std::find(rhs.begin(), rhs.end(), "basis");
            if (b != rhs.end()) basis_names.assign(b + 1, rhs.end());
            auto got = evaluation_subgroup(*ks, degree);
            check_classes(ctx, label, got, ks->base().gens(), rhs.at(0), basis_names);
            return;
        }
        if (kind == "split") {
            const KsExtension* ks = find_extension(ctx.doc, lhs.at(0));
            if (!ks) {
                ctx.fail(label, join(rhs), "unknown extension");
                return;
            }
            std::vector<std::string> gens(lhs.begin() + 1, lhs.end());
            std::string actual;
            try {
                auto cert = change_of_basis(*ks, gens);
                auto check = verify_certificate(cert);
                actual = check.ok ? "verified " + std::to_string(cert.k())
                                  : "unverified(" + check.failures.front() + ")";
            } catch (const RefusalError&) {
                actual = "refused";
            }
            ctx.emit(label, join(rhs), actual);
            return;
        }
        if (kind == "classify") {
            const KsExtension* ks = find_extension(ctx.doc, lhs.at(0));
            if (!ks) {
                ctx.fail(label, join(rhs), "unknown extension");
                return;
            }
            ctx.emit(label, join(rhs), to_string(classify_generator(*ks, lhs.at(1))));
            return;
        }
        ctx.fail(label, join(rhs), "unknown check kind '" + kind + "'");
    } catch (const std::exception& e) {
        ctx.fail(label, join(rhs), std::string("exception: ") + e.what());
    }
}

std::vector<CorpusCheckResult> run_fixture(const std::filesystem::path& sul_path) {
    std::vector<CorpusCheckResult> rows;
    std::string fixture = sul_path.stem().string();
    std::ifstream in(sul_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto parsed = parse(buffer.str());
    if (!parsed.ok()) {
        std::string msg;
        for (const auto& e : parsed.errors) msg += (msg.empty() ? "" : "; ") + e.render();
        rows.push_back({fixture, "parse", "ok", msg, false});
        return rows;
    }
    rows.push_back({fixture, "parse", "ok", "ok", true});

    bool valid = true;
    std::string invalid_msg;
    for (const auto& [name, alg] : parsed.document.algebras) {
        auto rep = validate(alg);
        if (!rep.valid()) {
            valid = false;
            invalid_msg = name + ": " + rep.findings.front().message;
        }
    }
    for (const auto& [name, ks] : parsed.document.extensions) {
        auto rep = validate(ks);
        if (!rep.valid()) {
            valid = false;
            invalid_msg = name + ": " + rep.findings.front().message;
        }
    }
    rows.push_back({fixture, "validate", "ok", valid ? "ok" : invalid_msg, valid});
    if (!valid) return rows;

    auto expect_path = sul_path;
    expect_path.replace_extension(".expect");
    if (!std::filesystem::exists(expect_path)) return rows;
    std::ifstream ein(expect_path);
    std::string line;
    CheckContext ctx{parsed.document, fixture, rows};
    while (std::getline(ein, line)) {
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        run_check(ctx, toks);
    }
    return rows;
}

}  // namespace

CorpusRunResult run_corpus(const std::string& directory) {
    CorpusRunResult result;
    std::vector<std::filesystem::path> fixtures;
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.path().extension() == ".sul") fixtures.push_back(entry.path());
    std::sort(fixtures.begin(), fixtures.end());
    result.fixture_count = fixtures.size();

    std::vector<std::future<std::vector<CorpusCheckResult>>> futures;
    for (const auto& f : fixtures)
        futures.push_back(std::async(std::launch::async, run_fixture, f));
    for (auto& fut : futures) {
        auto rows = fut.get();
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    }
    return result;
}

}  // namespace sullivan
