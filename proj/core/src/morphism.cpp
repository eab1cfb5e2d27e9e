#include "sullivan/morphism.hpp"

namespace sullivan {

Morphism::Morphism(SullivanAlgebra source, SullivanAlgebra target,
                   std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.gen_count())
        throw Error("morphism needs one image per source generator");
    for (auto& p : images_) {
        if (!p.domain().valid()) p = Polynomial(target_.gens());
        if (!p.domain().same_as(target_.gens()))
            throw DomainMismatchError("morphism image over a foreign generator set");
    }
}

Morphism Morphism::identity(const SullivanAlgebra& alg) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < alg.gen_count(); ++i)
        images.push_back(Polynomial::gen(alg.gens(), i));
    return Morphism(alg, alg, std::move(images));
}

Morphism Morphism::prefix_inclusion(const SullivanAlgebra& source,
                                    const SullivanAlgebra& target) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < source.gen_count(); ++i) {
        if (i >= target.gen_count() || !(target.gens().gen(i) == source.gens().gen(i)))
            throw Error("source generators are not a prefix of the target's");
        images.push_back(Polynomial::gen(target.gens(), i));
    }
    return Morphism(source, target, std::move(images));
}

Polynomial Morphism::apply(const Polynomial& p) const {
    if (p.domain().valid() && !p.domain().same_as(source_.gens()))
        throw DomainMismatchError("polynomial not over the morphism source");
    Polynomial out(target_.gens());
    for (const auto& [m, c] : p.terms()) {
        Polynomial prod = Polynomial::constant(target_.gens(), c);
        for (const auto& [g, e] : m.factors()) prod = prod * images_.at(g).pow(e);
        out += prod;
    }
    return out;
}

RationalMatrix Morphism::linear_part_matrix(int degree) const {
    auto src = source_.gens().indices_of_degree(degree);
    auto tgt = target_.gens().indices_of_degree(degree);
    RationalMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Polynomial lin = images_[src[j]].linear_part();
        for (std::size_t i = 0; i < tgt.size(); ++i)
            m.at(i, j) = lin.coefficient(Monomial::of_gen(target_.gens(), tgt[i]));
    }
    return m;
}

Morphism Morphism::then(const Morphism& next) const {
    if (!target_.gens().same_as(next.source().gens()))
        throw DomainMismatchError("morphism composition domain mismatch");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < source_.gen_count(); ++i)
        images.push_back(next.apply(images_[i]));
    return Morphism(source_, next.target(), std::move(images));
}

bool Morphism::operator==(const Morphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && images_ == other.images_;
}

ValidationReport validate(const Morphism& phi) {
    ValidationReport rep;
    using Sev = ValidationFinding::Severity;
    const auto& src = phi.source();
    for (std::size_t i = 0; i < src.gen_count(); ++i) {
        const auto& img = phi.image_of(i);
        if (!img.is_zero()) {
            auto hd = img.homogeneous_degree();
            if (!hd || *hd != src.gens().degree(i))
                rep.add(Sev::error, "degree", src.gens().name(i),
                        "image must be homogeneous of the generator's degree");
        }
        auto lhs = phi.apply(src.d_of(i));
        auto rhs = phi.target().apply_d(img);
        if (!(lhs == rhs))
            rep.add(Sev::error, "chain-map", src.gens().name(i),
                    "phi(d(" + src.gens().name(i) + ")) != d(phi(" + src.gens().name(i) + "))");
    }
    return rep;
}

}  // namespace sullivan
