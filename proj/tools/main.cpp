#include "sullivan/corpus.hpp"
#include "sullivan/gottlieb.hpp"
#include "sullivan/modelfile.hpp"
#include "sullivan/render.hpp"
#include "sullivan/splitting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sullivan;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefusedOrFalse = 1;
constexpr int kExitIo = 2;

struct Output {
    bool structured = false;
    void record(const json& j) {
        if (structured) std::cout << j.dump() << "\n";
    }
    void text(const std::string& line) {
        if (!structured) std::cout << line << "\n";
    }
};

ModelDocument load_or_exit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(kExitIo);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto result = parse(buf.str());
    for (const auto& w : result.warnings)
        std::cerr << path << ": warning: " << w.render() << "\n";
    if (!result.ok()) {
        for (const auto& e : result.errors)
            std::cerr << path << ": error: " << e.render() << "\n";
        std::exit(kExitIo);
    }
    return std::move(result.document);
}

const SullivanAlgebra& algebra_or_exit(const ModelDocument& doc, const std::string& name) {
    auto it = doc.algebras.find(name);
    if (it == doc.algebras.end()) {
        std::cerr << "error: no algebra named '" << name << "'\n";
        std::exit(kExitIo);
    }
    return it->second;
}

const KsExtension& extension_or_exit(const ModelDocument& doc, const std::string& name) {
    auto it = doc.extensions.find(name);
    if (it == doc.extensions.end()) {
        std::cerr << "error: no extension named '" << name << "'\n";
        std::exit(kExitIo);
    }
    return it->second;
}

/// Heuristic bound: largest generator degree plus largest relation degree.
int default_max_degree(const SullivanAlgebra& alg) {
    int gen_max = alg.gens().max_degree();
    int rel_max = 0;
    for (const auto& p : alg.differentials()) rel_max = std::max(rel_max, p.max_term_degree());
    return gen_max + rel_max;
}

json basis_json(const DualClasses& cls, const GenSet& gens) {
    json arr = json::array();
    for (const auto& rep : cls.representatives())
        arr.push_back(render_dual(rep, cls.ambient_gens, gens));
    return arr;
}

int cmd_validate(const std::string& file, Output& out) {
    auto doc = load_or_exit(file);
    bool valid = true;
    auto report_findings = [&](const std::string& kind, const std::string& name,
                               const ValidationReport& rep) {
        for (const auto& f : rep.findings) {
            bool err = f.severity == ValidationFinding::Severity::error;
            valid = valid && !err;
            out.text((err ? "error: " : "warning: ") + kind + " " + name + " [" + f.code +
                     "] " + f.subject + ": " + f.message);
            out.record({{"record", "finding"},
                        {"kind", kind},
                        {"name", name},
                        {"severity", err ? "error" : "warning"},
                        {"code", f.code},
                        {"subject", f.subject},
                        {"message", f.message}});
        }
    };
    for (const auto& [name, alg] : doc.algebras) report_findings("algebra", name, validate(alg));
    for (const auto& [name, ks] : doc.extensions)
        report_findings("extension", name, validate(ks));
    for (const auto& [name, phi] : doc.morphisms)
        report_findings("morphism", name, validate(phi));
    out.text(valid ? "valid" : "invalid");
    out.record({{"record", "verdict"}, {"verdict", valid}});
    return valid ? kExitOk : kExitRefusedOrFalse;
}

int cmd_gottlieb(const std::string& file, const std::string& name, int max_degree,
                 Output& out) {
    auto doc = load_or_exit(file);
    const auto& alg = algebra_or_exit(doc, name);
    if (max_degree < 0) max_degree = default_max_degree(alg);
    out.text("max degree: " + std::to_string(max_degree));
    out.record({{"record", "bound"}, {"max_degree", max_degree}});
    auto graded = gottlieb_group(alg, 1, max_degree);
    for (const auto& [degree, cls] : graded.per_degree) {
        out.text("G_" + std::to_string(degree) + ": dim " + std::to_string(cls.dim()) +
                 (cls.dim() ? "  basis " + render_classes(cls, alg.gens()) : ""));
        out.record({{"record", "gottlieb"},
                    {"degree", degree},
                    {"dim", cls.dim()},
                    {"basis", basis_json(cls, alg.gens())}});
    }
    out.text("total dim: " + std::to_string(graded.total_dim()));
    return kExitOk;
}

int cmd_eval_subgroup(const std::string& file, const std::string& name, int max_degree,
                      Output& out) {
    auto doc = load_or_exit(file);
    const auto& ks = extension_or_exit(doc, name);
    if (max_degree < 0) max_degree = default_max_degree(ks.base());
    out.text("max degree: " + std::to_string(max_degree));
    out.record({{"record", "bound"}, {"max_degree", max_degree}});
    auto graded = evaluation_subgroup(ks, 1, max_degree);
    for (const auto& [degree, cls] : graded.per_degree) {
        out.text("G_" + std::to_string(degree) + "(B,E;f): dim " +
                 std::to_string(cls.dim()) +
                 (cls.dim() ? "  basis " + render_classes(cls, ks.base().gens()) : ""));
        out.record({{"record", "evaluation-subgroup"},
                    {"degree", degree},
                    {"dim", cls.dim()},
                    {"basis", basis_json(cls, ks.base().gens())}});
    }
    out.text("total dim: " + std::to_string(graded.total_dim()));
    return kExitOk;
}

int cmd_obstruction(const std::string& file, const std::string& name, bool permutations,
                    Output& out) {
    auto doc = load_or_exit(file);
    const auto& ks = extension_or_exit(doc, name);
    ObstructionOptions opts;
    opts.check_order_permutations = permutations;
    auto rep = obstruction_group(ks, opts);

    std::string order;
    for (const auto& n : rep.base_order) order += (order.empty() ? "" : " < ") + n;
    out.text("base order: " + order);
    std::string surv;
    for (std::size_t i : rep.surviving)
        surv += (surv.empty() ? "" : ", ") + ks.base().gens().name(i);
    out.text("surviving generators: " + (surv.empty() ? "(none)" : surv));
    for (const auto& d : rep.diagnostics) {
        std::string line = "  " + d.name + "* (degree " + std::to_string(d.degree) + "): ";
        line += d.condition_i ? "closes on the total algebra" : "no closing derivation";
        if (d.condition_i && d.sigma && !d.sigma->is_zero())
            line += " via " + render_derivation(*d.sigma);
        line += d.condition_ii ? "; not Gottlieb in the base" : "; already Gottlieb in the base";
        if (!d.condition_ii && d.tau_violation && !d.tau_violation->is_zero())
            line += " via " + render_derivation(*d.tau_violation);
        line += d.qualifies ? "  -> obstructs" : "  -> no obstruction";
        out.text(line);
        out.record({{"record", "generator"},
                    {"name", d.name},
                    {"degree", d.degree},
                    {"condition_i", d.condition_i},
                    {"condition_ii", d.condition_ii},
                    {"qualifies", d.qualifies}});
    }
    for (const auto& [degree, cls] : rep.per_degree) {
        out.text("O_" + std::to_string(degree) + ": dim " + std::to_string(cls.dim()) +
                 "  basis " + render_classes(cls, ks.base().gens()));
        out.record({{"record", "obstruction"},
                    {"degree", degree},
                    {"dim", cls.dim()},
                    {"basis", basis_json(cls, ks.base().gens())}});
    }
    if (rep.cross_check_ran) {
        for (const auto& [degree, dim] : rep.direct_dims)
            if (dim || rep.per_degree.count(degree))
                out.text("definition cross-check O_" + std::to_string(degree) + ": dim " +
                         std::to_string(dim));
        if (rep.cross_check_mismatch) out.text("WARNING: definition cross-check mismatch");
    }
    for (const auto& w : rep.warnings) out.text("warning: " + w);
    if (rep.permutation_check_ran) {
        if (rep.permutation_discrepancies.empty()) {
            out.text("equal-degree permutations: no discrepancies");
        } else {
            for (const auto& disc : rep.permutation_discrepancies) {
                std::string o;
                for (const auto& n : disc.order) o += (o.empty() ? "" : " < ") + n;
                out.text("PERMUTATION DISCREPANCY under " + o + ": " + disc.detail);
            }
        }
    }
    bool verdict = rep.o == 0;
    out.text("o(f) = " + std::to_string(rep.o));
    out.text(verdict ? "the map is a rational Gottlieb map"
                     : "the map is NOT a rational Gottlieb map");
    out.record({{"record", "verdict"},
                {"o", rep.o},
                {"verdict", verdict},
                {"cross_check_mismatch", rep.cross_check_mismatch}});
    return kExitOk;
}

int cmd_split(const std::string& file, const std::string& name,
              const std::vector<std::string>& gens, Output& out) {
    auto doc = load_or_exit(file);
    const auto& ks = extension_or_exit(doc, name);
    auto cert = change_of_basis(ks, gens);
    const auto& total_gens = ks.total().gens();
    for (const auto& w : cert.witnesses)
        out.text("witness for " + w.generator + ": sigma = " +
                 (w.sigma.is_zero() ? "0" : render_derivation(w.sigma)));
    out.text("factored differential:");
    for (std::size_t g = 0; g < total_gens.size(); ++g)
        if (!cert.factored.d_of(g).is_zero())
            out.text("  D " + total_gens.name(g) + " = " + cert.factored.d_of(g).to_string());
    std::string spheres;
    for (std::size_t w : cert.split_indices)
        spheres += (spheres.empty() ? "" : " x ") + std::string("S^") +
                   std::to_string(total_gens.degree(w));
    out.text("split factor: " + spheres);
    auto check = verify_certificate(cert);
    for (const auto& f : check.failures) out.text("FAIL: " + f);
    out.text(check.ok ? "certificate verified" : "certificate NOT verified");
    json witnesses = json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back({{"generator", w.generator},
                             {"sigma", render_derivation(w.sigma)}});
    out.record({{"record", "certificate"},
                {"generators", cert.split_names},
                {"k", cert.k()},
                {"witnesses", witnesses},
                {"verdict", check.ok}});
    return check.ok ? kExitOk : kExitRefusedOrFalse;
}

int cmd_center(const std::string& file, const std::string& name, int max_degree, Output& out) {
    auto doc = load_or_exit(file);
    const auto& alg = algebra_or_exit(doc, name);
    if (max_degree < 0) max_degree = default_max_degree(alg);
    out.text("max degree: " + std::to_string(max_degree));
    out.record({{"record", "bound"}, {"max_degree", max_degree}});
    for (int degree = 1; degree <= max_degree; ++degree) {
        auto ambient = alg.gens().indices_of_degree(degree);
        if (ambient.empty()) continue;
        auto p = homotopy_center(alg, degree);
        DualClasses cls;
        cls.degree = degree;
        cls.ambient_gens = ambient;
        cls.space = p;
        cls.boundaries = SubspaceBasis(p.ambient());
        out.text("P_" + std::to_string(degree) + ": dim " + std::to_string(p.dim()) +
                 (p.dim() ? "  basis " + render_classes(cls, alg.gens()) : ""));
        out.record({{"record", "center"},
                    {"degree", degree},
                    {"dim", p.dim()},
                    {"basis", basis_json(cls, alg.gens())}});
    }
    return kExitOk;
}

int cmd_wmap(const std::string& file, const std::string& name, Output& out) {
    auto doc = load_or_exit(file);
    const auto& ks = extension_or_exit(doc, name);
    auto rep = is_w_map(ks);
    if (!rep.total_was_minimal) {
        std::string pairs;
        for (const auto& [a, b] : rep.cancelled_pairs)
            pairs += (pairs.empty() ? "" : ", ") + ("(" + a + ", " + b + ")");
        out.text("total algebra minimalized by cancelling: " + pairs);
    }
    for (const auto& d : rep.details) out.text(d);
    out.text(rep.verdict ? "the map is a W-map" : "the map is NOT a W-map");
    out.record({{"record", "verdict"},
                {"verdict", rep.verdict},
                {"total_was_minimal", rep.total_was_minimal}});
    return rep.verdict ? kExitOk : kExitRefusedOrFalse;
}

int cmd_corpus(std::string dir, Output& out) {
    if (dir.empty()) {
        if (const char* env = std::getenv("SULLIVAN_CORPUS_DIR")) dir = env;
    }
    if (dir.empty()) {
        std::cerr << "error: no corpus directory (use --dir or SULLIVAN_CORPUS_DIR)\n";
        return kExitIo;
    }
    CorpusRunResult result;
    try {
        result = run_corpus(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::size_t passed = 0;
    for (const auto& row : result.rows) {
        if (row.pass) ++passed;
        std::ostringstream line;
        line << (row.pass ? "PASS " : "FAIL ") << row.fixture << ": " << row.check;
        if (!row.pass) line << "  expected [" << row.expected << "] got [" << row.actual << "]";
        out.text(line.str());
        out.record({{"record", "corpus-check"},
                    {"fixture", row.fixture},
                    {"check", row.check},
                    {"expected", row.expected},
                    {"actual", row.actual},
                    {"verdict", row.pass}});
    }
    out.text(std::to_string(passed) + "/" + std::to_string(result.rows.size()) +
             " checks passed over " + std::to_string(result.fixture_count) + " fixtures");
    out.record({{"record", "verdict"},
                {"verdict", result.all_pass()},
                {"passed", passed},
                {"total", result.rows.size()}});
    return result.all_pass() ? kExitOk : kExitRefusedOrFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of rationalized Gottlieb groups, evaluation subgroups,\n"
                 "Gottlieb-map obstructions and induced product splittings from Sullivan\n"
                 "presentations (.sul model files)."};
    app.require_subcommand(1);

    std::string format = "text";
    std::string file, name, dir;
    int max_degree = -1;
    std::vector<std::string> gens;
    bool permutations = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or structured (JSON lines)")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* validate_cmd = app.add_subcommand("validate", "check a model file");
    validate_cmd->add_option("file", file)->required();
    add_format(validate_cmd);

    auto* gottlieb_cmd = app.add_subcommand("gottlieb", "Gottlieb group of an algebra");
    gottlieb_cmd->add_option("file", file)->required();
    gottlieb_cmd->add_option("algebra", name)->required();
    gottlieb_cmd->add_option("--max-degree", max_degree);
    add_format(gottlieb_cmd);

    auto* eval_cmd = app.add_subcommand("eval-subgroup", "evaluation subgroup of an extension");
    eval_cmd->add_option("file", file)->required();
    eval_cmd->add_option("extension", name)->required();
    eval_cmd->add_option("--max-degree", max_degree);
    add_format(eval_cmd);

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "obstruction group and r.G-map verdict");
    obstruction_cmd->add_option("file", file)->required();
    obstruction_cmd->add_option("extension", name)->required();
    obstruction_cmd->add_flag("--check-permutations", permutations,
                              "re-run under equal-degree reorderings");
    add_format(obstruction_cmd);

    auto* split_cmd = app.add_subcommand("split", "change of basis splitting off odd spheres");
    split_cmd->add_option("file", file)->required();
    split_cmd->add_option("extension", name)->required();
    split_cmd->add_option("--generators", gens, "base generators to split")
        ->required()
        ->delimiter(',');
    add_format(split_cmd);

    auto* center_cmd = app.add_subcommand("center", "homotopy Lie algebra center");
    center_cmd->add_option("file", file)->required();
    center_cmd->add_option("algebra", name)->required();
    center_cmd->add_option("--max-degree", max_degree);
    add_format(center_cmd);

    auto* wmap_cmd = app.add_subcommand("wmap", "W-map predicate");
    wmap_cmd->add_option("file", file)->required();
    wmap_cmd->add_option("extension", name)->required();
    add_format(wmap_cmd);

    auto* corpus_cmd = app.add_subcommand("corpus", "run the fixture corpus");
    corpus_cmd->add_option("--dir", dir, "corpus directory");
    add_format(corpus_cmd);

    CLI11_PARSE(app, argc, argv);
    Output out;
    out.structured = format == "structured";

    auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (*validate_cmd) code = cmd_validate(file, out);
        else if (*gottlieb_cmd) code = cmd_gottlieb(file, name, max_degree, out);
        else if (*eval_cmd) code = cmd_eval_subgroup(file, name, max_degree, out);
        else if (*obstruction_cmd) code = cmd_obstruction(file, name, permutations, out);
        else if (*split_cmd) code = cmd_split(file, name, gens, out);
        else if (*center_cmd) code = cmd_center(file, name, max_degree, out);
        else if (*wmap_cmd) code = cmd_wmap(file, name, out);
        else if (*corpus_cmd) code = cmd_corpus(dir, out);
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusedOrFalse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefusedOrFalse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    if (!out.structured) {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }
    return code;
}
