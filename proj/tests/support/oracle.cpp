#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace sullivan::testing {

Polynomial partial_derivative(const Polynomial& p, std::size_t v) {
    const GenSet& gens = p.domain();
    Polynomial out(gens);
    for (const auto& [m, c] : p.terms()) {
        int sign_exp = 0;
        for (std::size_t j = 0; j < m.factors().size(); ++j) {
            auto [g, e] = m.factors()[j];
            if (g == v) {
                // Remove one copy of v; the sign moves v out through the
                // factors on its left.
                std::vector<std::uint32_t> rest;
                for (std::size_t i = 0; i < m.factors().size(); ++i) {
                    auto [gi, ei] = m.factors()[i];
                    std::uint32_t keep = ei - (i == j ? 1u : 0u);
                    for (std::uint32_t t = 0; t < keep; ++t) rest.push_back(gi);
                }
                auto nm = Monomial::from_factors(gens, rest);
                if (nm) {
                    Rational sgn = (gens.degree(v) * sign_exp) % 2 == 0 ? 1 : -1;
                    out.add_term(nm->first, c * Rational(e) * sgn * nm->second);
                }
            }
            sign_exp += gens.degree(g) * static_cast<int>(e);
        }
    }
    return out;
}

PhiDerivation oracle_delta_elementary(std::shared_ptr<const Morphism> phi, int degree,
                                      std::size_t v, const Polynomial& h) {
    const auto& src = phi->source();
    const auto& tgt = phi->target();
    std::vector<Polynomial> values(src.gen_count(), Polynomial(tgt.gens()));
    // Term (v, d'h).
    values[v] += tgt.apply_d(h);
    // Terms -s_i (u_i, phi(d(du_i)/dv) h) with
    // s_i = (-1)^{n + |h| (|u_i| + 1 - |v|)}.
    int hdeg = src.gens().degree(v) - degree;
    for (std::size_t u = 0; u < src.gen_count(); ++u) {
        Polynomial part = partial_derivative(src.d_of(u), v);
        if (part.is_zero()) continue;
        int exp = degree + hdeg * (src.gens().degree(u) + 1 - src.gens().degree(v));
        Rational sgn = exp % 2 == 0 ? 1 : -1;
        values[u] += (phi->apply(part) * h).scaled(-sgn);
    }
    return PhiDerivation(phi, degree - 1, std::move(values));
}

namespace {

/// Row-reduction existence test, written independently of sullivan::linalg:
/// does A x = b admit a solution supported on the allowed columns?
bool solvable(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
              const std::vector<std::size_t>& allowed) {
    std::size_t nrows = rows.size();
    std::size_t piv_row = 0;
    for (std::size_t col : allowed) {
        std::size_t sel = piv_row;
        while (sel < nrows && rows[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[sel], rows[piv_row]);
        std::swap(rhs[sel], rhs[piv_row]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == piv_row || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[piv_row][col];
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                rows[r][c] -= f * rows[piv_row][c];
            rhs[r] -= f * rhs[piv_row];
        }
        ++piv_row;
        if (piv_row == nrows) break;
    }
    // Remaining rows must have zero rhs once the allowed columns are swept.
    for (std::size_t r = piv_row; r < nrows; ++r)
        if (rhs[r] != 0) return false;
    return true;
}

struct OracleSlice {
    std::vector<std::pair<std::size_t, Monomial>> basis;
    std::vector<std::pair<std::size_t, Monomial>> lower;
    std::vector<std::vector<Rational>> matrix;  // rows: lower, cols: basis
};

OracleSlice oracle_slice(std::shared_ptr<const Morphism> phi, int degree) {
    const auto& src = phi->source();
    const auto& tgt = phi->target();
    OracleSlice s;
    for (std::size_t g = 0; g < src.gen_count(); ++g) {
        int vd = src.gens().degree(g) - degree;
        if (vd < 0) continue;
        for (const auto& m : monomial_basis(tgt.gens(), vd)) s.basis.push_back({g, m});
    }
    for (std::size_t g = 0; g < src.gen_count(); ++g) {
        int vd = src.gens().degree(g) - degree + 1;
        if (vd < 0) continue;
        for (const auto& m : monomial_basis(tgt.gens(), vd)) s.lower.push_back({g, m});
    }
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
    for (std::size_t i = 0; i < s.lower.size(); ++i) row_of[s.lower[i]] = i;
    s.matrix.assign(s.lower.size(), std::vector<Rational>(s.basis.size(), Rational(0)));
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
        auto b = oracle_delta_elementary(phi, degree, s.basis[j].first,
                                         Polynomial::term(tgt.gens(), s.basis[j].second, 1));
        for (std::size_t g = 0; g < src.gen_count(); ++g)
            for (const auto& [m, c] : b.value_on(g).terms())
                s.matrix[row_of.at({g, m})][j] = c;
    }
    return s;
}

}  // namespace

OracleObstruction oracle_obstruction(const KsExtension& ks) {
    OracleObstruction out;
    const auto& base = ks.base();
    const auto& total = ks.total();

    // Surviving generators, read off the linear parts directly.
    std::vector<std::size_t> surviving;
    for (std::size_t i = 0; i < base.gen_count(); ++i) {
        if (!total.d_of(i).linear_part().is_zero()) continue;
        int deg = total.gens().degree(i);
        auto slice_gens = total.gens().indices_of_degree(deg);
        // Column space of the linear parts landing in this degree.
        std::vector<std::vector<Rational>> cols;
        for (std::size_t g = 0; g < total.gen_count(); ++g) {
            if (total.gens().degree(g) != deg - 1) continue;
            Polynomial lin = total.d_of(g).linear_part();
            if (lin.is_zero()) continue;
            std::vector<Rational> col(slice_gens.size(), Rational(0));
            for (std::size_t k = 0; k < slice_gens.size(); ++k)
                col[k] = lin.coefficient(Monomial::of_gen(total.gens(), slice_gens[k]));
            cols.push_back(std::move(col));
        }
        std::vector<Rational> target(slice_gens.size(), Rational(0));
        for (std::size_t k = 0; k < slice_gens.size(); ++k)
            if (slice_gens[k] == i) target[k] = 1;
        // i survives iff target is not in the span of cols.
        std::vector<std::vector<Rational>> rows(slice_gens.size());
        for (std::size_t r = 0; r < slice_gens.size(); ++r) {
            rows[r].resize(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) rows[r][c] = cols[c][r];
        }
        std::vector<std::size_t> all_cols(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) all_cols[c] = c;
        if (!solvable(rows, target, all_cols)) surviving.push_back(i);
    }

    auto total_id = std::make_shared<Morphism>(Morphism::identity(total));
    auto base_id = std::make_shared<Morphism>(Morphism::identity(base));
    std::map<int, OracleSlice> total_slices, base_slices;

    for (std::size_t i : surviving) {
        int n = base.gens().degree(i);
        if (!total_slices.count(n)) total_slices.emplace(n, oracle_slice(total_id, n));
        if (!base_slices.count(n)) base_slices.emplace(n, oracle_slice(base_id, n));

        auto condition = [&](const OracleSlice& s, std::size_t base_count) {
            std::vector<std::size_t> allowed;
            std::ptrdiff_t dual_pos = -1;
            for (std::size_t p = 0; p < s.basis.size(); ++p) {
                if (s.basis[p].first == i && s.basis[p].second.is_unit())
                    dual_pos = static_cast<std::ptrdiff_t>(p);
                if (s.basis[p].second.is_unit() && s.basis[p].first < base_count &&
                    s.basis[p].first <= i)
                    continue;
                allowed.push_back(p);
            }
            std::vector<Rational> rhs(s.lower.size(), Rational(0));
            for (std::size_t r = 0; r < s.lower.size(); ++r)
                rhs[r] = -s.matrix[r][static_cast<std::size_t>(dual_pos)];
            return solvable(s.matrix, rhs, allowed);
        };

        bool cond_i = condition(total_slices.at(n), ks.base_count());
        bool cond_ii = !condition(base_slices.at(n), ks.base_count());
        if (cond_i && cond_ii) out.qualifying.insert(base.gens().name(i));
    }
    out.o = out.qualifying.size();
    return out;
}

std::size_t oracle_gottlieb_homology_dim(const KsExtension& ks, int degree) {
    const auto& total = ks.total();
    auto ambient_gens = total.gens().indices_of_degree(degree);
    std::size_t ambient = ambient_gens.size();

    auto constants_of_cycles = [&](std::shared_ptr<const Morphism> phi,
                                   const std::vector<std::size_t>& dual_gens) {
        auto s = oracle_slice(phi, degree);
        RationalMatrix m(s.lower.size(), s.basis.size());
        for (std::size_t r = 0; r < s.lower.size(); ++r)
            for (std::size_t c = 0; c < s.basis.size(); ++c) m.at(r, c) = s.matrix[r][c];
        auto ker = kernel_basis(m);
        std::vector<RationalVector> projected;
        for (const auto& v : ker.basis()) {
            RationalVector p(dual_gens.size(), Rational(0));
            for (std::size_t k = 0; k < dual_gens.size(); ++k)
                for (std::size_t pos = 0; pos < s.basis.size(); ++pos)
                    if (s.basis[pos].first == dual_gens[k] && s.basis[pos].second.is_unit())
                        p[k] = v[pos];
            projected.push_back(std::move(p));
        }
        return SubspaceBasis::span(dual_gens.size(), projected);
    };

    // Dual coboundaries of the total algebra in this degree.
    std::vector<RationalVector> boundary_vecs;
    for (std::size_t g = 0; g < total.gen_count(); ++g) {
        if (total.gens().degree(g) != degree - 1) continue;
        Polynomial lin = total.d_of(g).linear_part();
        if (lin.is_zero()) continue;
        // chi -> chi(Q(D) g) contributes the row of coefficients; its image
        // is spanned by the transposed columns.
        (void)lin;
    }
    // Assemble im(partial: Hom_{degree+1} -> Hom_degree) columnwise.
    for (std::size_t h = 0; h < total.gen_count(); ++h) {
        if (total.gens().degree(h) != degree + 1) continue;
        RationalVector col(ambient, Rational(0));
        bool nonzero = false;
        for (std::size_t k = 0; k < ambient; ++k) {
            Polynomial lin = total.d_of(ambient_gens[k]).linear_part();
            Rational c = lin.coefficient(Monomial::of_gen(total.gens(), h));
            if (c != 0) nonzero = true;
            col[k] = c;
        }
        if (nonzero) boundary_vecs.push_back(std::move(col));
    }
    auto boundaries = SubspaceBasis::span(ambient, boundary_vecs);

    auto rho = std::make_shared<Morphism>(ks.fiber_projection());
    auto v_ev = constants_of_cycles(rho, ambient_gens).sum(boundaries);

    std::vector<std::size_t> fiber_axes;
    for (std::size_t k = 0; k < ambient; ++k)
        if (ambient_gens[k] >= ks.base_count()) fiber_axes.push_back(k);
    auto numerator = v_ev.intersect(SubspaceBasis::coordinate(ambient, fiber_axes));

    auto fib = ks.fiber();
    auto fib_id = std::make_shared<Morphism>(Morphism::identity(fib));
    auto fib_dual_gens = fib.gens().indices_of_degree(degree);
    auto g_fib = constants_of_cycles(fib_id, fib_dual_gens);
    // Fiber dual boundaries.
    std::vector<RationalVector> fb;
    for (std::size_t h = 0; h < fib.gen_count(); ++h) {
        if (fib.gens().degree(h) != degree + 1) continue;
        RationalVector col(fib_dual_gens.size(), Rational(0));
        for (std::size_t k = 0; k < fib_dual_gens.size(); ++k)
            col[k] = fib.d_of(fib_dual_gens[k])
                         .linear_part()
                         .coefficient(Monomial::of_gen(fib.gens(), h));
        fb.push_back(std::move(col));
    }
    auto g_fib_full = g_fib.sum(SubspaceBasis::span(fib_dual_gens.size(), fb));

    std::vector<RationalVector> extended;
    for (const auto& v : g_fib_full.basis()) {
        RationalVector e(ambient, Rational(0));
        std::size_t k = 0;
        for (std::size_t idx = 0; idx < ambient; ++idx)
            if (ambient_gens[idx] >= ks.base_count()) e[idx] = v[k++];
        extended.push_back(std::move(e));
    }
    auto denominator = SubspaceBasis::span(ambient, extended).sum(boundaries);
    return numerator.dim() - numerator.intersect(denominator).dim();
}

}  // namespace sullivan::testing
