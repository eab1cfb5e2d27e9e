#include "sullivan/gottlieb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sullivan {

namespace {

/// Matrix of the dual boundary Hom_n -> Hom_{n-1}: chi -> chi o Q(d).
RationalMatrix dual_matrix_down(const SullivanAlgebra& alg, int degree) {
    auto rows = alg.gens().indices_of_degree(degree - 1);
    auto cols = alg.gens().indices_of_degree(degree);
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Polynomial lin = alg.d_of(rows[r]).linear_part();
        for (std::size_t c = 0; c < cols.size(); ++c)
            m.at(r, c) = lin.coefficient(Monomial::of_gen(alg.gens(), cols[c]));
    }
    return m;
}

/// Constant parts of the kernel of the slice boundary: the subspace of
/// Hom_n hit by delta-closed derivations.
SubspaceBasis projected_cycles(const DerivationComplexSlice& slice,
                               std::size_t ambient) {
    auto pos = slice.dual_positions();
    auto cycles = kernel_basis(slice.boundary);
    std::vector<RationalVector> projected;
    for (const auto& v : cycles.basis()) {
        RationalVector p(ambient, Rational(0));
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] >= 0) p[i] = v[static_cast<std::size_t>(pos[i])];
        projected.push_back(std::move(p));
    }
    return SubspaceBasis::span(ambient, projected);
}

void guard_degree_one(const SullivanAlgebra& alg, int degree) {
    if (degree < 2 && alg.gens().has_degree_one())
        throw RefusalError(
            "degree-1 dual requested on an algebra with degree-1 generators; "
            "fundamental-group Gottlieb theory is out of range");
}

std::vector<int> relevant_degrees(const GenSet& gens) {
    std::vector<int> degs;
    for (std::size_t i = 0; i < gens.size(); ++i) degs.push_back(gens.degree(i));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    if (gens.has_degree_one())
        degs.erase(std::remove(degs.begin(), degs.end(), 1), degs.end());
    return degs;
}

}  // namespace

SubspaceBasis dual_boundaries(const SullivanAlgebra& alg, int degree) {
    auto ambient = alg.gens().indices_of_degree(degree).size();
    auto up = dual_matrix_down(alg, degree + 1);  // Hom_{n+1} -> Hom_n
    if (up.rows() != ambient) throw InternalError("dual boundary shape mismatch");
    return image_basis(up);
}

DualClasses gottlieb_group(const SullivanAlgebra& alg, int degree) {
    guard_degree_one(alg, degree);
    DualClasses out;
    out.degree = degree;
    out.ambient_gens = alg.gens().indices_of_degree(degree);
    std::size_t ambient = out.ambient_gens.size();
    out.boundaries = SubspaceBasis(ambient);
    out.space = SubspaceBasis(ambient);
    if (ambient == 0) return out;
    auto id = std::make_shared<Morphism>(Morphism::identity(alg));
    auto slice = complex_slice(id, degree);
    out.boundaries = dual_boundaries(alg, degree);
    out.space = projected_cycles(slice, ambient).sum(out.boundaries);
    return out;
}

GradedSubspace gottlieb_group(const SullivanAlgebra& alg, int min_degree, int max_degree) {
    GradedSubspace out;
    for (int d : relevant_degrees(alg.gens())) {
        if (d < min_degree || d > max_degree) continue;
        out.per_degree[d] = gottlieb_group(alg, d);
    }
    return out;
}

DualClasses evaluation_subgroup(const KsExtension& ks, int degree) {
    guard_degree_one(ks.base(), degree);
    DualClasses out;
    out.degree = degree;
    out.ambient_gens = ks.base().gens().indices_of_degree(degree);
    std::size_t ambient = out.ambient_gens.size();
    out.boundaries = SubspaceBasis(ambient);
    out.space = SubspaceBasis(ambient);
    if (ambient == 0) return out;
    auto incl = std::make_shared<Morphism>(ks.base_inclusion());
    auto slice = complex_slice(incl, degree);
    out.boundaries = dual_boundaries(ks.base(), degree);
    out.space = projected_cycles(slice, ambient).sum(out.boundaries);
    return out;
}

GradedSubspace evaluation_subgroup(const KsExtension& ks, int min_degree, int max_degree) {
    GradedSubspace out;
    for (int d : relevant_degrees(ks.base().gens())) {
        if (d < min_degree || d > max_degree) continue;
        out.per_degree[d] = evaluation_subgroup(ks, d);
    }
    return out;
}

namespace {

struct ConditionContext {
    std::shared_ptr<const Morphism> total_id;
    std::shared_ptr<const Morphism> base_id;
    std::map<int, DerivationComplexSlice> total_slices;
    std::map<int, DerivationComplexSlice> base_slices;

    const DerivationComplexSlice& total_slice(int n) {
        auto it = total_slices.find(n);
        if (it == total_slices.end())
            it = total_slices.emplace(n, complex_slice(total_id, n)).first;
        return it->second;
    }
    const DerivationComplexSlice& base_slice(int n) {
        auto it = base_slices.find(n);
        if (it == base_slices.end())
            it = base_slices.emplace(n, complex_slice(base_id, n)).first;
        return it->second;
    }
};

RationalVector restrict_to_base(const RationalVector& total_dual,
                                const std::vector<std::size_t>& total_ambient,
                                std::size_t base_count, std::size_t base_ambient) {
    RationalVector out(base_ambient, Rational(0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < total_ambient.size(); ++i) {
        if (total_ambient[i] < base_count) {
            out.at(k) = total_dual[i];
            ++k;
        }
    }
    if (k != base_ambient) throw InternalError("base dual slice misaligned");
    return out;
}

ObstructionReport obstruction_impl(const KsExtension& ks, const ObstructionOptions& opts);

/// Rebuild the extension with base generators permuted inside equal-degree
/// blocks (fiber untouched); monomial reordering signs are absorbed by the
/// normal form.
KsExtension permuted_extension(const KsExtension& ks, const std::vector<std::size_t>& order) {
    const auto& old_total = ks.total().gens();
    std::size_t nb = ks.base_count();
    std::vector<Generator> base_gens;
    std::vector<int> remap(old_total.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        base_gens.push_back(old_total.gen(order[k]));
        remap[order[k]] = static_cast<int>(k);
    }
    for (std::size_t i = nb; i < old_total.size(); ++i) remap[i] = static_cast<int>(i);
    GenSet new_base_gens(base_gens);
    std::vector<Generator> fiber;
    for (std::size_t i = nb; i < old_total.size(); ++i) fiber.push_back(old_total.gen(i));
    GenSet new_total_gens = GenSet::concat(new_base_gens, GenSet(fiber));

    auto remap_poly = [&](const Polynomial& p, const GenSet& dom) {
        Polynomial out(dom);
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::uint32_t> factors;
            for (const auto& [g, e] : m.factors())
                for (std::uint32_t t = 0; t < e; ++t)
                    factors.push_back(static_cast<std::uint32_t>(remap[g]));
            auto nm = Monomial::from_factors(dom, factors);
            if (nm) out.add_term(nm->first, c * nm->second);
        }
        return out;
    };

    std::vector<Polynomial> base_d;
    for (std::size_t k = 0; k < order.size(); ++k)
        base_d.push_back(remap_poly(ks.base().d_of(order[k]), new_base_gens));
    SullivanAlgebra new_base(new_base_gens, std::move(base_d));

    std::vector<Polynomial> total_d;
    for (std::size_t k = 0; k < order.size(); ++k)
        total_d.push_back(remap_poly(ks.total().d_of(order[k]), new_total_gens));
    for (std::size_t i = nb; i < old_total.size(); ++i)
        total_d.push_back(remap_poly(ks.total().d_of(i), new_total_gens));
    return KsExtension(new_base, std::move(fiber), std::move(total_d));
}

void run_permutation_check(const KsExtension& ks, ObstructionReport& report) {
    report.permutation_check_ran = true;
    const auto& base = ks.base().gens();
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < base.size();) {
        std::size_t j = i;
        while (j < base.size() && base.degree(j) == base.degree(i)) ++j;
        std::vector<std::size_t> block(j - i);
        std::iota(block.begin(), block.end(), i);
        blocks.push_back(std::move(block));
        i = j;
    }
    std::size_t count = 1;
    for (const auto& b : blocks) {
        std::size_t f = 1;
        for (std::size_t k = 2; k <= b.size(); ++k) f *= k;
        count *= f;
        if (count > 720) {
            report.warnings.push_back(
                "permutation check skipped: too many equal-degree orderings");
            return;
        }
    }
    std::vector<std::vector<std::size_t>> block_perms_acc{{}};
    for (const auto& b : blocks) {
        std::vector<std::size_t> perm = b;
        std::vector<std::vector<std::size_t>> next;
        std::sort(perm.begin(), perm.end());
        do {
            for (const auto& prefix : block_perms_acc) {
                auto ext = prefix;
                ext.insert(ext.end(), perm.begin(), perm.end());
                next.push_back(std::move(ext));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        block_perms_acc = std::move(next);
    }
    ObstructionOptions sub;
    sub.check_order_permutations = false;
    sub.definition_cross_check = false;
    std::vector<std::string> base_names(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) base_names[i] = base.name(i);
    auto qualifying_names = [](const ObstructionReport& r) {
        std::vector<std::string> names;
        for (const auto& d : r.diagnostics)
            if (d.qualifies) names.push_back(d.name);
        std::sort(names.begin(), names.end());
        return names;
    };
    auto reference = qualifying_names(obstruction_impl(ks, sub));
    for (const auto& order : block_perms_acc) {
        bool is_identity = true;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (order[k] != k) is_identity = false;
        if (is_identity) continue;
        auto permuted = permuted_extension(ks, order);
        auto rep = obstruction_impl(permuted, sub);
        auto names = qualifying_names(rep);
        if (names != reference) {
            ObstructionReport::PermutationDiscrepancy disc;
            for (std::size_t i : order) disc.order.push_back(base_names[i]);
            disc.o = rep.o;
            std::ostringstream os;
            os << "qualifying duals {";
            for (std::size_t i = 0; i < names.size(); ++i)
                os << (i ? ", " : "") << names[i] << "*";
            os << "} differ from the declared order's result";
            disc.detail = os.str();
            report.permutation_discrepancies.push_back(std::move(disc));
        }
    }
}

ObstructionReport obstruction_impl(const KsExtension& ks, const ObstructionOptions& opts) {
    const auto& base = ks.base();
    for (std::size_t i = 0; i + 1 < base.gen_count(); ++i)
        if (base.gens().degree(i) > base.gens().degree(i + 1))
            throw RefusalError("obstruction_group requires base generators ordered by "
                               "nondecreasing degree");
    ObstructionReport report;
    for (std::size_t i = 0; i < base.gen_count(); ++i)
        report.base_order.push_back(base.gens().name(i));
    report.surviving = surviving_base_indices(ks);

    bool base_minimal = base.is_minimal();
    if (!base_minimal)
        report.warnings.push_back(
            "base is not minimal: Hom(W, Q) does not present pi_*(B); "
            "definition-level cross-check skipped");

    ConditionContext ctx;
    ctx.total_id = std::make_shared<Morphism>(Morphism::identity(ks.total()));
    ctx.base_id = std::make_shared<Morphism>(Morphism::identity(base));

    std::map<int, std::vector<std::size_t>> qualifying_by_degree;
    for (std::size_t i : report.surviving) {
        GeneratorDiagnostic diag;
        diag.name = base.gens().name(i);
        diag.index = i;
        diag.degree = base.gens().degree(i);
        diag.survives_linear_part = true;
        int n = diag.degree;
        if (n < 2 && ks.total().gens().has_degree_one())
            throw RefusalError("degree-1 base dual in an algebra with degree-1 generators");

        auto sigma = close_dual(ctx.total_slice(n), i, i, ks.base_count());
        diag.condition_i = sigma.has_value();
        diag.sigma = std::move(sigma);

        auto tau = close_dual(ctx.base_slice(n), i, i, ks.base_count());
        diag.condition_ii = !tau.has_value();
        diag.tau_violation = std::move(tau);

        diag.qualifies = diag.condition_i && diag.condition_ii;
        if (diag.qualifies) qualifying_by_degree[n].push_back(i);
        report.diagnostics.push_back(std::move(diag));
    }

    for (const auto& [n, gens] : qualifying_by_degree) {
        DualClasses cls;
        cls.degree = n;
        cls.ambient_gens = base.gens().indices_of_degree(n);
        std::vector<RationalVector> duals;
        for (std::size_t g : gens) {
            RationalVector v(cls.ambient_gens.size(), Rational(0));
            for (std::size_t k = 0; k < cls.ambient_gens.size(); ++k)
                if (cls.ambient_gens[k] == g) v[k] = 1;
            duals.push_back(std::move(v));
        }
        cls.space = SubspaceBasis::span(cls.ambient_gens.size(), duals);
        cls.boundaries = SubspaceBasis(cls.ambient_gens.size());
        report.o += cls.dim();
        report.per_degree.emplace(n, std::move(cls));
    }

    if (opts.definition_cross_check && base_minimal) {
        report.cross_check_ran = true;
        std::vector<int> degrees = relevant_degrees(base.gens());
        for (int n : degrees) {
            if (n < 2 && ks.total().gens().has_degree_one()) continue;
            auto ge = gottlieb_group(ks.total(), n);  // classes of G_n(E)
            auto gb = gottlieb_group(base, n);
            std::size_t base_ambient = gb.ambient_gens.size();
            std::vector<RationalVector> restricted;
            for (const auto& v : ge.space.basis())
                restricted.push_back(restrict_to_base(v, ge.ambient_gens, ks.base_count(),
                                                      base_ambient));
            auto image = SubspaceBasis::span(base_ambient, restricted);
            std::size_t direct = image.sum(gb.space).dim() - gb.space.dim();
            report.direct_dims[n] = direct;
            auto it = report.per_degree.find(n);
            std::size_t span_dim = it == report.per_degree.end() ? 0 : it->second.dim();
            if (direct != span_dim) report.cross_check_mismatch = true;
        }
        if (report.cross_check_mismatch)
            report.warnings.push_back(
                "definition-level image-quotient dimensions disagree with the "
                "reported span; see direct_dims");
    }
    return report;
}

}  // namespace

ObstructionReport obstruction_group(const KsExtension& ks, const ObstructionOptions& opts) {
    auto report = obstruction_impl(ks, opts);
    if (opts.check_order_permutations) run_permutation_check(ks, report);
    return report;
}

bool is_rg_map(const KsExtension& ks) {
    ObstructionOptions opts;
    opts.definition_cross_check = false;
    return obstruction_group(ks, opts).o == 0;
}

bool is_rg_map(const Morphism& model_of_f) {
    // model_of_f: M(B) -> M(E); the dual of its linear part is pi_*(f).
    const auto& bmodel = model_of_f.source();
    const auto& emodel = model_of_f.target();
    for (int n : relevant_degrees(emodel.gens())) {
        if (n < 2 && (emodel.gens().has_degree_one() || bmodel.gens().has_degree_one()))
            continue;
        auto ge = gottlieb_group(emodel, n);
        if (ge.dim() == 0) continue;
        auto gb = gottlieb_group(bmodel, n);
        auto L = model_of_f.linear_part_matrix(n);  // rows: E gens, cols: B gens
        auto Lt = L.transposed();
        for (const auto& v : ge.space.basis()) {
            auto image = Lt.apply(v);
            if (!gb.space.contains(image)) return false;
        }
    }
    return true;
}

namespace {

struct GhSpaces {
    std::vector<std::size_t> ambient_gens;  // total gens of the degree
    SubspaceBasis numerator;    // (V_ev + B_E) with zero base restriction
    SubspaceBasis denominator;  // ext0 of fiber Gottlieb classes + B_E
    SubspaceBasis boundaries;   // B_E
};

GhSpaces gh_spaces(const KsExtension& ks, int degree) {
    if (!ks.base().is_minimal())
        throw RefusalError("Gottlieb homology needs a minimal base");
    guard_degree_one(ks.total(), degree);
    GhSpaces out;
    out.ambient_gens = ks.total().gens().indices_of_degree(degree);
    std::size_t ambient = out.ambient_gens.size();
    out.boundaries = dual_boundaries(ks.total(), degree);

    // Evaluation subgroup of the fiber inclusion: derivations of the total
    // algebra valued in the fiber along the projection.
    auto rho = std::make_shared<Morphism>(ks.fiber_projection());
    auto slice = complex_slice(rho, degree);
    auto v_ev = projected_cycles(slice, ambient);
    auto space = v_ev.sum(out.boundaries);

    // Base-null coordinate subspace (pi_n(f) kernel side).
    std::vector<std::size_t> fiber_axes;
    for (std::size_t k = 0; k < out.ambient_gens.size(); ++k)
        if (out.ambient_gens[k] >= ks.base_count()) fiber_axes.push_back(k);
    auto wnull = SubspaceBasis::coordinate(ambient, fiber_axes);
    out.numerator = space.intersect(wnull);

    // Image of the fiber's Gottlieb classes under pi_n(j).
    auto fib = ks.fiber();
    SubspaceBasis fiber_gottlieb(0);
    {
        auto g = gottlieb_group(fib, degree);
        fiber_gottlieb = g.space;
    }
    std::vector<RationalVector> extended;
    for (const auto& v : fiber_gottlieb.basis()) {
        RationalVector e(ambient, Rational(0));
        std::size_t k = 0;
        for (std::size_t i = 0; i < out.ambient_gens.size(); ++i)
            if (out.ambient_gens[i] >= ks.base_count()) {
                e[i] = v[k];
                ++k;
            }
        extended.push_back(std::move(e));
    }
    out.denominator = SubspaceBasis::span(ambient, extended).sum(out.boundaries);
    if (!out.numerator.contains(out.denominator))
        throw InternalError("Gottlieb homology denominator escapes the numerator");
    return out;
}

}  // namespace

GottliebHomologySlice gottlieb_homology(const KsExtension& ks, int degree) {
    auto spaces = gh_spaces(ks, degree);
    GottliebHomologySlice out;
    out.degree = degree;
    out.ambient_gens = spaces.ambient_gens;
    out.dim = spaces.numerator.dim() - spaces.denominator.dim();
    out.representatives = spaces.numerator.complement_of(spaces.denominator);
    return out;
}

SubspaceBasis homotopy_center(const SullivanAlgebra& alg, int degree) {
    if (!alg.is_minimal())
        throw RefusalError("homotopy_center requires a minimal algebra: the quadratic "
                           "part of a non-minimal differential is not homotopy-invariant");
    guard_degree_one(alg, degree);
    auto cols = alg.gens().indices_of_degree(degree);
    if (cols.empty()) return SubspaceBasis(0);

    std::vector<RationalVector> rows;
    for (std::size_t v = 0; v < alg.gen_count(); ++v) {
        Polynomial quad(alg.gens());
        for (const auto& [m, c] : alg.d_of(v).terms()) {
            std::uint32_t total_exp = 0;
            for (const auto& [g, e] : m.factors()) total_exp += e;
            if (total_exp == 2) quad.add_term(m, c);
        }
        if (quad.is_zero()) continue;
        for (std::size_t b = 0; b < alg.gen_count(); ++b) {
            if (alg.gens().degree(v) != degree + alg.gens().degree(b) - 1) continue;
            RationalVector row(cols.size(), Rational(0));
            bool nonzero = false;
            for (const auto& [m, c] : quad.terms()) {
                const auto& f = m.factors();
                // <x*y; a, b> = [x==a][y==b] + (-1)^{|x||y|}[y==a][x==b];
                // <x^2; a, b> = 2 [x==a][x==b].
                auto add = [&](std::size_t xa, std::size_t yb, const Rational& coeff) {
                    if (yb != b) return;
                    for (std::size_t k = 0; k < cols.size(); ++k)
                        if (cols[k] == xa) {
                            row[k] += coeff;
                            nonzero = true;
                        }
                };
                if (f.size() == 1 && f[0].second == 2) {
                    add(f[0].first, f[0].first, 2 * c);
                } else if (f.size() == 2) {
                    std::size_t x = f[0].first, y = f[1].first;
                    Rational sgn =
                        (alg.gens().degree(x) * alg.gens().degree(y)) % 2 == 0 ? 1 : -1;
                    add(x, y, c);
                    add(y, x, c * sgn);
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return SubspaceBasis::full(cols.size());
    return kernel_basis(RationalMatrix::from_rows(rows, cols.size()));
}

WMapReport is_w_map(const KsExtension& ks) {
    WMapReport report;
    if (!ks.base().is_minimal())
        throw RefusalError("is_w_map requires a minimal base");
    SullivanAlgebra total_min = ks.total();
    Morphism psi;  // base -> minimal total
    if (total_min.is_minimal()) {
        psi = ks.base_inclusion();
    } else {
        report.total_was_minimal = false;
        auto red = minimalize(ks.total());
        total_min = red.minimal;
        report.cancelled_pairs = red.cancelled;
        std::vector<Polynomial> images(red.gen_images.begin(),
                                       red.gen_images.begin() +
                                           static_cast<std::ptrdiff_t>(ks.base_count()));
        psi = Morphism(ks.base(), total_min, std::move(images));
        if (!validate(psi).valid())
            throw InternalError("minimalization did not produce a DGA morphism");
    }
    report.verdict = true;
    for (int n : relevant_degrees(total_min.gens())) {
        auto p_total = homotopy_center(total_min, n);
        if (p_total.dim() == 0) continue;
        auto base_cols = ks.base().gens().indices_of_degree(n);
        auto p_base = homotopy_center(ks.base(), n);
        auto L = psi.linear_part_matrix(n);  // rows: total_min gens, cols: base gens
        auto Lt = L.transposed();
        for (const auto& chi : p_total.basis()) {
            auto image = Lt.apply(chi);
            bool ok = base_cols.empty() ? std::all_of(image.begin(), image.end(),
                                                      [](const Rational& q) { return q == 0; })
                                        : p_base.contains(image);
            if (!ok) {
                report.verdict = false;
                std::ostringstream os;
                os << "degree " << n << ": a central dual class maps outside the base center";
                report.details.push_back(os.str());
            }
        }
    }
    return report;
}

std::string to_string(SphericalClass c) {
    switch (c) {
        case SphericalClass::K1: return "K1";
        case SphericalClass::K2: return "K2";
        case SphericalClass::K3: return "K3";
        case SphericalClass::K4: return "K4";
        default: return "none";
    }
}

SphericalClass classify_generator(const KsExtension& ks, const std::string& dual_name) {
    int idx = ks.total().gens().index_of(dual_name);
    if (idx < 0) throw Error("unknown generator '" + dual_name + "'");
    auto z = static_cast<std::size_t>(idx);
    int n = ks.total().gens().degree(z);
    if (n % 2 == 0)
        throw RefusalError("classify_generator applies to odd spherical generators; '" +
                           dual_name + "' has even degree");

    auto total_ambient = ks.total().gens().indices_of_degree(n);
    RationalVector zvec(total_ambient.size(), Rational(0));
    for (std::size_t k = 0; k < total_ambient.size(); ++k)
        if (total_ambient[k] == z) zvec[k] = 1;

    auto spaces = gh_spaces(ks, n);
    // K1: comes from pi_*(j) G(X) and is not a boundary class.
    if (!spaces.boundaries.contains(zvec) && spaces.denominator.contains(zvec))
        return SphericalClass::K1;
    // K2: represents a nonzero Gottlieb homology class.
    if (spaces.numerator.contains(zvec) && !spaces.denominator.contains(zvec))
        return SphericalClass::K2;

    if (z < ks.base_count()) {
        auto base_ambient = ks.base().gens().indices_of_degree(n);
        RationalVector wvec(base_ambient.size(), Rational(0));
        for (std::size_t k = 0; k < base_ambient.size(); ++k)
            if (base_ambient[k] == z) wvec[k] = 1;
        ObstructionOptions opts;
        opts.definition_cross_check = false;
        auto obs = obstruction_group(ks, opts);
        auto it = obs.per_degree.find(n);
        if (it != obs.per_degree.end() && it->second.space.contains(wvec))
            return SphericalClass::K3;
        auto gb = gottlieb_group(ks.base(), n);
        if (gb.space.contains(wvec) && !gb.is_class_zero(wvec)) return SphericalClass::K4;
    }
    return SphericalClass::None;
}

}  // namespace sullivan
