#include "sullivan/algebra.hpp"

#include <algorithm>
#include <map>

namespace sullivan {

SullivanAlgebra::SullivanAlgebra(GenSet gens, std::vector<Polynomial> differentials)
    : gens_(std::move(gens)), d_(std::move(differentials)) {
    d_.resize(gens_.size(), Polynomial(gens_));
    for (auto& p : d_)
        if (!p.domain().valid()) p = Polynomial(gens_);
    for (const auto& p : d_)
        if (!p.domain().same_as(gens_))
            throw DomainMismatchError("differential value over a foreign generator set");
}

SullivanAlgebra SullivanAlgebra::free(GenSet gens) {
    std::vector<Polynomial> zero(gens.size(), Polynomial(gens));
    return SullivanAlgebra(std::move(gens), std::move(zero));
}

Polynomial SullivanAlgebra::apply_d(const Polynomial& p) const {
    if (p.domain().valid() && !p.domain().same_as(gens_))
        throw DomainMismatchError("polynomial not over this algebra's generators");
    Polynomial out(gens_);
    for (const auto& [m, c] : p.terms()) {
        // d(g1^e1 ... gk^ek) = sum_j +-(e_j) g1^e1 ... g_j^{e_j-1} d(g_j) ... gk^ek
        const auto& factors = m.factors();
        int sign_exp = 0;  // parity of the degree to the left of the active factor
        for (std::size_t j = 0; j < factors.size(); ++j) {
            auto [g, e] = factors[j];
            // Assemble prefix (with g^{e-1}; even g, so no sign subtleties
            // inside the block: odd generators always have e == 1).
            Polynomial left = Polynomial::constant(gens_, 1);
            for (std::size_t i = 0; i < j; ++i) {
                auto [gi, ei] = factors[i];
                left = left * Polynomial::gen(gens_, gi).pow(ei);
            }
            Polynomial right = Polynomial::constant(gens_, 1);
            for (std::size_t i = j + 1; i < factors.size(); ++i) {
                auto [gi, ei] = factors[i];
                right = right * Polynomial::gen(gens_, gi).pow(ei);
            }
            const Polynomial& dg = d_.at(g);
            if (!dg.is_zero()) {
                Polynomial block = Polynomial::gen(gens_, g).pow(e - 1).scaled(Rational(e));
                Polynomial term = left * block * dg * right;
                Rational sgn = (sign_exp % 2 == 0) ? 1 : -1;
                out += term.scaled(c * sgn);
            }
            sign_exp += gens_.degree(g) * static_cast<int>(e);
        }
    }
    return out;
}

bool SullivanAlgebra::is_minimal() const {
    for (const auto& p : d_)
        if (!p.linear_part().is_zero() || p.constant_term() != 0) return false;
    return true;
}

bool SullivanAlgebra::is_pure() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_.gen(i).is_odd()) {
            if (!d_[i].is_zero()) return false;
        } else {
            for (const auto& [m, c] : d_[i].terms())
                for (const auto& [g, e] : m.factors())
                    if (gens_.gen(g).is_odd()) return false;
        }
    }
    return true;
}

bool SullivanAlgebra::operator==(const SullivanAlgebra& other) const {
    if (!gens_.same_as(other.gens_)) return false;
    return d_ == other.d_;
}

ValidationReport validate(const SullivanAlgebra& alg, bool check_ordering) {
    ValidationReport rep;
    using Sev = ValidationFinding::Severity;
    const auto& gens = alg.gens();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.degree(i) == 1)
            rep.add(Sev::warning, "degree-one", gens.name(i),
                    "degree-1 generator; results outside the simply connected range");
        if (check_ordering && i + 1 < gens.size() && gens.degree(i) > gens.degree(i + 1))
            rep.add(Sev::error, "ordering", gens.name(i + 1),
                    "generators must be declared in nondecreasing degree order");
        const auto& dg = alg.d_of(i);
        if (!dg.is_zero()) {
            auto hd = dg.homogeneous_degree();
            if (!hd || *hd != gens.degree(i) + 1)
                rep.add(Sev::error, "degree", gens.name(i),
                        "d must raise degree by exactly 1 (got " + dg.to_string() + ")");
        }
        auto dd = alg.apply_d(dg);
        if (!dd.is_zero())
            rep.add(Sev::error, "d-squared", gens.name(i),
                    "d(d(" + gens.name(i) + ")) = " + dd.to_string() + " != 0");
    }
    if (!alg.is_minimal()) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!alg.d_of(i).linear_part().is_zero()) {
                rep.add(Sev::warning, "non-minimal", gens.name(i),
                        "differential has a linear term");
                break;
            }
    }
    return rep;
}

RationalMatrix differential_matrix(const SullivanAlgebra& alg, int degree) {
    auto dom = monomial_basis(alg.gens(), degree);
    auto codom = monomial_basis(alg.gens(), degree + 1);
    std::map<Monomial, std::size_t> codom_index;
    for (std::size_t i = 0; i < codom.size(); ++i) codom_index[codom[i]] = i;
    RationalMatrix m(codom.size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
        auto img = alg.apply_d(Polynomial::term(alg.gens(), dom[j], 1));
        for (const auto& [mono, c] : img.terms()) m.at(codom_index.at(mono), j) = c;
    }
    return m;
}

CohomologyResult cohomology(const SullivanAlgebra& alg, int max_degree) {
    CohomologyResult out;
    out.dims.resize(static_cast<std::size_t>(max_degree) + 1, 0);
    out.representatives.resize(static_cast<std::size_t>(max_degree) + 1);
    RationalMatrix prev;  // d from degree k-1 to k
    for (int k = 0; k <= max_degree; ++k) {
        auto basis = monomial_basis(alg.gens(), k);
        RationalMatrix cur = differential_matrix(alg, k);
        auto cycles = kernel_basis(cur);
        SubspaceBasis bound = (k == 0) ? SubspaceBasis(basis.size()) : image_basis(prev);
        out.dims[static_cast<std::size_t>(k)] = cycles.dim() - bound.intersection_dim(cycles);
        for (const auto& rep : cycles.complement_of(bound)) {
            Polynomial p(alg.gens());
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (rep[i] != 0) p.add_term(basis[i], rep[i]);
            out.representatives[static_cast<std::size_t>(k)].push_back(std::move(p));
        }
        prev = std::move(cur);
    }
    return out;
}

namespace {

/// Substitution endomorphism sending every generator to the provided image
/// (over the *target* generator set).
Polynomial substitute(const Polynomial& p, const GenSet& target,
                      const std::vector<Polynomial>& images) {
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial prod = Polynomial::constant(target, c);
        for (const auto& [g, e] : m.factors()) prod = prod * images.at(g).pow(e);
        out += prod;
    }
    return out;
}

}  // namespace

Minimalization minimalize(const SullivanAlgebra& alg) {
    Minimalization result;
    result.minimal = alg;
    // Images of the original generators, updated through each cancellation.
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < alg.gen_count(); ++i)
        images.push_back(Polynomial::gen(alg.gens(), i));

    SullivanAlgebra cur = alg;
    while (true) {
        // Lowest-degree generator with a linear term in its differential.
        int pick = -1;
        for (std::size_t i = 0; i < cur.gen_count(); ++i) {
            if (cur.d_of(i).linear_part().is_zero()) continue;
            if (pick < 0 || cur.gens().degree(i) < cur.gens().degree(static_cast<std::size_t>(pick)))
                pick = static_cast<int>(i);
        }
        if (pick < 0) break;
        auto v = static_cast<std::size_t>(pick);
        const Polynomial& dv = cur.d_of(v);
        Polynomial lin = dv.linear_part();
        // Pivot generator x with d(v) = c*x + rest.
        std::size_t x = lin.terms().begin()->first.factors()[0].first;
        Rational c = lin.terms().begin()->second;
        Polynomial rest = dv - Polynomial::gen(cur.gens(), x).scaled(c);
        for (const auto& [m, k] : rest.terms())
            if (m.contains(static_cast<std::uint32_t>(x)) || m.contains(static_cast<std::uint32_t>(v)))
                throw RefusalError("cannot cancel pair (" + cur.gens().name(v) + ", " +
                                   cur.gens().name(x) + "): remainder mentions the pair");
        // New generator set without v and x.
        std::vector<Generator> kept;
        std::vector<int> remap(cur.gen_count(), -1);
        for (std::size_t i = 0; i < cur.gen_count(); ++i) {
            if (i == v || i == x) continue;
            remap[i] = static_cast<int>(kept.size());
            kept.push_back(cur.gens().gen(i));
        }
        GenSet new_gens(kept);
        // Reduction map: v -> 0, x -> -rest/c, others -> themselves.
        std::vector<Polynomial> red(cur.gen_count(), Polynomial(new_gens));
        for (std::size_t i = 0; i < cur.gen_count(); ++i) {
            if (i == v) continue;
            if (i == x) {
                Polynomial img(new_gens);
                for (const auto& [m, k] : rest.terms()) {
                    std::vector<std::uint32_t> factors;
                    for (const auto& [g, e] : m.factors())
                        for (std::uint32_t t = 0; t < e; ++t)
                            factors.push_back(static_cast<std::uint32_t>(remap[g]));
                    auto nm = Monomial::from_factors(new_gens, factors);
                    if (nm) img.add_term(nm->first, -k / c * nm->second);
                }
                red[i] = img;
            } else {
                red[i] = Polynomial::gen(new_gens, static_cast<std::size_t>(remap[i]));
            }
        }
        std::vector<Polynomial> new_d(kept.size(), Polynomial(new_gens));
        for (std::size_t i = 0; i < cur.gen_count(); ++i) {
            if (i == v || i == x) continue;
            new_d[static_cast<std::size_t>(remap[i])] = substitute(cur.d_of(i), new_gens, red);
        }
        result.cancelled.emplace_back(cur.gens().name(v), cur.gens().name(x));
        for (auto& img : images) img = substitute(img, new_gens, red);
        cur = SullivanAlgebra(new_gens, std::move(new_d));
    }
    auto rep = validate(cur, /*check_ordering=*/false);
    if (!rep.valid()) throw InternalError("minimalize produced an invalid algebra");
    result.minimal = cur;
    result.gen_images = std::move(images);
    return result;
}

}  // namespace sullivan
