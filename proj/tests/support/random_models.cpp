#include "random_models.hpp"

#include "sullivan/algebra.hpp"

namespace sullivan::testing {

namespace {

/// Random cocycle of the given degree in alg (zero when none exist).
Polynomial random_cocycle(Rng& rng, const SullivanAlgebra& alg, int degree) {
    auto basis = monomial_basis(alg.gens(), degree);
    if (basis.empty()) return Polynomial(alg.gens());
    auto m = differential_matrix(alg, degree);
    auto ker = kernel_basis(m);
    Polynomial out(alg.gens());
    for (const auto& v : ker.basis()) {
        int c = rng.range(-2, 2);
        if (c == 0) continue;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v[i] != 0) out.add_term(basis[i], v[i] * c);
    }
    return out;
}

}  // namespace

SullivanAlgebra random_algebra(Rng& rng, int max_gens, int max_degree) {
    int count = rng.range(1, max_gens);
    std::vector<int> degrees;
    for (int i = 0; i < count; ++i) degrees.push_back(rng.range(2, max_degree));
    std::sort(degrees.begin(), degrees.end());

    std::vector<Generator> gens;
    for (int i = 0; i < count; ++i)
        gens.push_back({"g" + std::to_string(i + 1), degrees[static_cast<std::size_t>(i)]});

    // Build incrementally so each differential is a cocycle over the earlier
    // part; extend the earlier values to the growing generator set.
    SullivanAlgebra partial = SullivanAlgebra::free(GenSet(std::vector<Generator>{}));
    std::vector<Polynomial> values;  // over partial gens at each step
    for (int k = 0; k < count; ++k) {
        std::vector<Generator> prefix(gens.begin(), gens.begin() + k);
        GenSet prefix_gens(prefix);
        std::vector<Polynomial> d;
        for (int i = 0; i < k; ++i) {
            Polynomial lift(prefix_gens);
            for (const auto& [m, c] : values[static_cast<std::size_t>(i)].terms())
                lift.add_term(m, c);
            d.push_back(std::move(lift));
        }
        partial = SullivanAlgebra(prefix_gens, d);
        values.clear();
        for (int i = 0; i < k; ++i) values.push_back(partial.d_of(static_cast<std::size_t>(i)));
        values.push_back(random_cocycle(rng, partial, degrees[static_cast<std::size_t>(k)] + 1));
    }
    GenSet full(gens);
    std::vector<Polynomial> d;
    for (auto& v : values) {
        Polynomial lift(full);
        for (const auto& [m, c] : v.terms()) lift.add_term(m, c);
        d.push_back(std::move(lift));
    }
    return SullivanAlgebra(full, std::move(d));
}

Polynomial random_homogeneous(Rng& rng, const SullivanAlgebra& alg, int degree) {
    Polynomial out(alg.gens());
    auto basis = monomial_basis(alg.gens(), degree);
    for (const auto& m : basis) {
        int c = rng.range(-6, 6);
        if (c > 2 || c < -2) continue;  // keep it sparse
        if (c != 0) out.add_term(m, c);
    }
    return out;
}

Polynomial random_polynomial(Rng& rng, const SullivanAlgebra& alg, int max_degree) {
    Polynomial out(alg.gens());
    for (int i = 0; i < 3; ++i)
        out += random_homogeneous(rng, alg, rng.range(0, max_degree));
    return out;
}

KsExtension random_extension(Rng& rng, const SullivanAlgebra& base, int max_fiber) {
    int count = rng.range(1, max_fiber);
    SullivanAlgebra cur = base;
    for (int k = 0; k < count; ++k) {
        int degree = rng.range(2, 7);
        Polynomial value = random_cocycle(rng, cur, degree + 1);
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < cur.gen_count(); ++i) gens.push_back(cur.gens().gen(i));
        gens.push_back({"f" + std::to_string(k + 1), degree});
        GenSet next(gens);
        std::vector<Polynomial> d;
        for (std::size_t i = 0; i < cur.gen_count(); ++i) {
            Polynomial lift(next);
            for (const auto& [m, c] : cur.d_of(i).terms()) lift.add_term(m, c);
            d.push_back(std::move(lift));
        }
        Polynomial lifted_value(next);
        for (const auto& [m, c] : value.terms()) lifted_value.add_term(m, c);
        d.push_back(std::move(lifted_value));
        cur = SullivanAlgebra(next, std::move(d));
    }
    return KsExtension::from_total(base, cur);
}

}  // namespace sullivan::testing
