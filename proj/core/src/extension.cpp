#include "sullivan/extension.hpp"

#include <algorithm>

namespace sullivan {

GradedLinearMap::GradedLinearMap(GenSet gens, std::vector<Polynomial> linear_values)
    : gens_(std::move(gens)), values_(std::move(linear_values)) {
    for (const auto& v : values_)
        if (!v.linear_part().is_zero() && !(v == v.linear_part()))
            throw Error("GradedLinearMap values must be linear");
}

RationalMatrix GradedLinearMap::matrix(int degree) const {
    auto dom = gens_.indices_of_degree(degree);
    auto codom = gens_.indices_of_degree(degree + 1);
    RationalMatrix m(codom.size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j)
        for (std::size_t i = 0; i < codom.size(); ++i)
            m.at(i, j) = values_[dom[j]].coefficient(Monomial::of_gen(gens_, codom[i]));
    return m;
}

bool GradedLinearMap::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

namespace {
Polynomial embed_into(const Polynomial& p, const GenSet& total) {
    // Base generators form a prefix of the total generator list, so the
    // monomials transfer index-for-index.
    Polynomial out(total);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c);
    return out;
}
}  // namespace

KsExtension::KsExtension(SullivanAlgebra base, std::vector<Generator> fiber_gens,
                         std::vector<Polynomial> total_differentials)
    : base_(std::move(base)) {
    GenSet total_gens = GenSet::concat(base_.gens(), GenSet(std::move(fiber_gens)));
    if (total_differentials.size() != total_gens.size())
        throw Error("KsExtension needs a differential per total generator");
    for (std::size_t i = 0; i < base_.gen_count(); ++i) {
        Polynomial expected = embed_into(base_.d_of(i), total_gens);
        if (!(total_differentials[i] == expected))
            throw Error("total differential does not restrict to the base differential on '" +
                        base_.gens().name(i) + "'");
    }
    total_ = SullivanAlgebra(total_gens, std::move(total_differentials));
}

KsExtension KsExtension::from_total(SullivanAlgebra base, SullivanAlgebra total) {
    std::vector<Generator> fiber;
    for (std::size_t i = base.gen_count(); i < total.gen_count(); ++i)
        fiber.push_back(total.gens().gen(i));
    std::vector<Polynomial> d;
    for (std::size_t i = 0; i < total.gen_count(); ++i) d.push_back(total.d_of(i));
    return KsExtension(std::move(base), std::move(fiber), std::move(d));
}

SullivanAlgebra KsExtension::fiber() const {
    std::vector<Generator> fiber_gens;
    for (std::size_t i = base_count(); i < total_.gen_count(); ++i)
        fiber_gens.push_back(total_.gens().gen(i));
    GenSet fg(fiber_gens);
    std::size_t nb = base_count();
    std::vector<Polynomial> d;
    for (std::size_t i = nb; i < total_.gen_count(); ++i) {
        Polynomial v(fg);
        for (const auto& [m, c] : total_.d_of(i).terms()) {
            bool touches_base = false;
            std::vector<std::uint32_t> factors;
            for (const auto& [g, e] : m.factors()) {
                if (g < nb) {
                    touches_base = true;
                    break;
                }
                for (std::uint32_t t = 0; t < e; ++t)
                    factors.push_back(static_cast<std::uint32_t>(g - nb));
            }
            if (touches_base) continue;
            auto nm = Monomial::from_factors(fg, factors);
            if (nm) v.add_term(nm->first, c * nm->second);
        }
        d.push_back(std::move(v));
    }
    return SullivanAlgebra(fg, std::move(d));
}

Morphism KsExtension::base_inclusion() const {
    return Morphism::prefix_inclusion(base_, total_);
}

Morphism KsExtension::fiber_projection() const {
    SullivanAlgebra fib = fiber();
    std::vector<Polynomial> images;
    std::size_t nb = base_count();
    for (std::size_t i = 0; i < total_.gen_count(); ++i) {
        if (i < nb)
            images.push_back(Polynomial(fib.gens()));
        else
            images.push_back(Polynomial::gen(fib.gens(), i - nb));
    }
    return Morphism(total_, fib, std::move(images));
}

bool KsExtension::operator==(const KsExtension& other) const {
    return base_ == other.base_ && total_ == other.total_;
}

ValidationReport validate(const KsExtension& ks) {
    ValidationReport rep = validate(ks.base());
    // The total interleaves base and fiber degrees; only per-block ordering
    // is meaningful, so skip the global ordering check.
    auto total_rep = validate(ks.total(), /*check_ordering=*/false);
    for (auto& f : total_rep.findings) rep.findings.push_back(std::move(f));
    return rep;
}

KsExtension compose_ks(const KsExtension& outer, const KsExtension& inner) {
    if (!inner.base().gens().same_as(outer.total().gens()))
        throw DomainMismatchError("inner extension must be based on the outer total algebra");
    if (!(inner.base() == outer.total()))
        throw Error("inner total differential does not restrict to the outer one");
    std::vector<Generator> fiber;
    for (std::size_t i = outer.base_count(); i < inner.total().gen_count(); ++i)
        fiber.push_back(inner.total().gens().gen(i));
    std::vector<Polynomial> d;
    for (std::size_t i = 0; i < inner.total().gen_count(); ++i)
        d.push_back(inner.total().d_of(i));
    return KsExtension(outer.base(), std::move(fiber), std::move(d));
}

KsExtension pullback_model(const KsExtension& ks, const Morphism& base_map) {
    if (!base_map.source().gens().same_as(ks.base().gens()))
        throw DomainMismatchError("base map source must be the extension base");
    const SullivanAlgebra& new_base = base_map.target();
    std::size_t nb = ks.base_count();
    std::size_t new_nb = new_base.gen_count();

    std::vector<Generator> fiber;
    for (std::size_t i = nb; i < ks.total().gen_count(); ++i)
        fiber.push_back(ks.total().gens().gen(i));
    GenSet new_total_gens = GenSet::concat(new_base.gens(), GenSet(fiber));

    // Substitution total -> new total: base gens through the morphism,
    // fiber gens to themselves.
    auto push = [&](const Polynomial& p) {
        Polynomial out(new_total_gens);
        for (const auto& [m, c] : p.terms()) {
            Polynomial prod = Polynomial::constant(new_total_gens, c);
            for (const auto& [g, e] : m.factors()) {
                Polynomial img(new_total_gens);
                if (g < nb) {
                    for (const auto& [bm, bc] : base_map.image_of(g).terms())
                        img.add_term(bm, bc);  // new-base prefix transfers index-wise
                } else {
                    img = Polynomial::gen(new_total_gens, new_nb + (g - nb));
                }
                prod = prod * img.pow(e);
            }
            out += prod;
        }
        return out;
    };

    std::vector<Polynomial> d;
    for (std::size_t i = 0; i < new_nb; ++i) {
        Polynomial v(new_total_gens);
        for (const auto& [m, c] : new_base.d_of(i).terms()) v.add_term(m, c);
        d.push_back(std::move(v));
    }
    for (std::size_t i = nb; i < ks.total().gen_count(); ++i) {
        Polynomial v = push(ks.total().d_of(i));
        if (!v.is_zero()) {
            auto hd = v.homogeneous_degree();
            if (!hd || *hd != ks.total().gens().degree(i) + 1)
                throw DegreeError("degree mismatch substituting the differential of '" +
                                  ks.total().gens().name(i) + "'");
        }
        d.push_back(std::move(v));
    }
    std::vector<Generator> fiber_copy = fiber;
    return KsExtension(new_base, std::move(fiber_copy), std::move(d));
}

GradedLinearMap linear_part(const KsExtension& ks) {
    std::vector<Polynomial> values;
    for (std::size_t i = 0; i < ks.total().gen_count(); ++i)
        values.push_back(ks.total().d_of(i).linear_part());
    return GradedLinearMap(ks.total().gens(), std::move(values));
}

std::vector<std::size_t> surviving_base_indices(const KsExtension& ks) {
    GradedLinearMap q = linear_part(ks);
    const GenSet& gens = ks.total().gens();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ks.base_count(); ++i) {
        if (!q.value_on(i).is_zero()) continue;  // not a Q(D)-cycle
        int deg = gens.degree(i);
        auto slice = gens.indices_of_degree(deg);
        RationalMatrix into_deg = q.matrix(deg - 1);
        auto image = image_basis(into_deg);
        RationalVector v(slice.size(), Rational(0));
        for (std::size_t k = 0; k < slice.size(); ++k)
            if (slice[k] == i) v[k] = 1;
        if (!image.contains(v)) out.push_back(i);
    }
    return out;
}

}  // namespace sullivan
