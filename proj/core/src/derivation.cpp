#include "sullivan/derivation.hpp"

#include <algorithm>
#include <map>

namespace sullivan {

PhiDerivation::PhiDerivation(std::shared_ptr<const Morphism> along, int degree,
                             std::vector<Polynomial> values)
    : along_(std::move(along)), degree_(degree), values_(std::move(values)) {
    const auto& src = along_->source();
    const auto& tgt = along_->target();
    values_.resize(src.gen_count(), Polynomial(tgt.gens()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto& v = values_[i];
        if (!v.domain().valid()) v = Polynomial(tgt.gens());
        if (!v.domain().same_as(tgt.gens()))
            throw DomainMismatchError("derivation value over a foreign generator set");
        if (v.is_zero()) continue;
        auto hd = v.homogeneous_degree();
        if (!hd || *hd != src.gens().degree(i) - degree_)
            throw DegreeError("derivation value on '" + src.gens().name(i) +
                              "' must be homogeneous of degree |gen| - n");
    }
}

PhiDerivation PhiDerivation::elementary(std::shared_ptr<const Morphism> along, int degree,
                                        std::size_t source_gen, Polynomial h) {
    std::vector<Polynomial> values(along->source().gen_count(),
                                   Polynomial(along->target().gens()));
    values.at(source_gen) = std::move(h);
    return PhiDerivation(std::move(along), degree, std::move(values));
}

PhiDerivation PhiDerivation::zero(std::shared_ptr<const Morphism> along, int degree) {
    return PhiDerivation(std::move(along), degree, {});
}

bool PhiDerivation::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial PhiDerivation::apply(const Polynomial& p) const {
    const auto& src = along_->source();
    const auto& tgt = along_->target();
    if (p.domain().valid() && !p.domain().same_as(src.gens()))
        throw DomainMismatchError("polynomial not over the derivation source");
    Polynomial out(tgt.gens());
    for (const auto& [m, c] : p.terms()) {
        const auto& factors = m.factors();
        int left_degree = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            auto [g, e] = factors[j];
            const Polynomial& tg = values_.at(g);
            if (!tg.is_zero()) {
                // theta over the j-th block: e * phi(g)^{e-1} theta(g); for
                // e > 1 the generator is even, so all positions agree.
                Polynomial left = Polynomial::constant(tgt.gens(), 1);
                for (std::size_t i = 0; i < j; ++i)
                    left = left * along_->image_of(factors[i].first).pow(factors[i].second);
                Polynomial right = Polynomial::constant(tgt.gens(), 1);
                for (std::size_t i = j + 1; i < factors.size(); ++i)
                    right = right * along_->image_of(factors[i].first).pow(factors[i].second);
                Polynomial block =
                    along_->image_of(g).pow(e - 1).scaled(Rational(e)) * tg;
                Rational sgn = (degree_ * left_degree) % 2 == 0 ? 1 : -1;
                out += (left * block * right).scaled(c * sgn);
            }
            left_degree += src.gens().degree(g) * static_cast<int>(e);
        }
    }
    return out;
}

PhiDerivation PhiDerivation::operator+(const PhiDerivation& other) const {
    if (degree_ != other.degree_) throw DegreeError("adding derivations of different degree");
    std::vector<Polynomial> values;
    for (std::size_t i = 0; i < values_.size(); ++i)
        values.push_back(values_[i] + other.values_[i]);
    return PhiDerivation(along_, degree_, std::move(values));
}

PhiDerivation PhiDerivation::operator-(const PhiDerivation& other) const {
    return *this + other.scaled(-1);
}

PhiDerivation PhiDerivation::scaled(const Rational& c) const {
    std::vector<Polynomial> values;
    for (const auto& v : values_) values.push_back(v.scaled(c));
    return PhiDerivation(along_, degree_, std::move(values));
}

bool PhiDerivation::operator==(const PhiDerivation& other) const {
    return degree_ == other.degree_ && values_ == other.values_;
}

PhiDerivation delta(const PhiDerivation& theta) {
    const auto& src = theta.along().source();
    const auto& tgt = theta.along().target();
    Rational sgn = theta.degree() % 2 == 0 ? 1 : -1;
    std::vector<Polynomial> values;
    for (std::size_t i = 0; i < src.gen_count(); ++i) {
        Polynomial v = tgt.apply_d(theta.value_on(i)) - theta.apply(src.d_of(i)).scaled(sgn);
        values.push_back(std::move(v));
    }
    return PhiDerivation(theta.along_ptr(), theta.degree() - 1, std::move(values));
}

namespace {
std::vector<DerivationComplexSlice::BasisElement> slice_basis(const SullivanAlgebra& source,
                                                              const SullivanAlgebra& target,
                                                              int degree) {
    std::vector<DerivationComplexSlice::BasisElement> basis;
    for (std::size_t g = 0; g < source.gen_count(); ++g) {
        int vd = source.gens().degree(g) - degree;
        if (vd < 0) continue;
        for (const auto& m : monomial_basis(target.gens(), vd)) basis.push_back({g, m});
    }
    return basis;
}
}  // namespace

PhiDerivation DerivationComplexSlice::from_coordinates(const RationalVector& coords) const {
    if (coords.size() != basis.size()) throw Error("coordinate/basis size mismatch");
    const auto& tgt = along->target();
    std::vector<Polynomial> values(along->source().gen_count(), Polynomial(tgt.gens()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0) values[basis[i].source_gen].add_term(basis[i].value, coords[i]);
    return PhiDerivation(along, degree, std::move(values));
}

RationalVector DerivationComplexSlice::to_coordinates(const PhiDerivation& theta) const {
    RationalVector coords(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        coords[i] = theta.value_on(basis[i].source_gen).coefficient(basis[i].value);
    return coords;
}

std::vector<std::ptrdiff_t> DerivationComplexSlice::dual_positions() const {
    const auto& src = along->source().gens();
    std::vector<std::ptrdiff_t> out;
    for (std::size_t g : src.indices_of_degree(degree)) {
        std::ptrdiff_t pos = -1;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].source_gen == g && basis[i].value.is_unit()) {
                pos = static_cast<std::ptrdiff_t>(i);
                break;
            }
        out.push_back(pos);
    }
    return out;
}

DerivationComplexSlice complex_slice(std::shared_ptr<const Morphism> phi, int degree) {
    if (degree < 1) throw RefusalError("derivation complex slices require degree >= 1");
    const auto& source = phi->source();
    const auto& target = phi->target();
    DerivationComplexSlice slice;
    slice.degree = degree;
    slice.along = phi;
    slice.basis = slice_basis(source, target, degree);
    slice.boundary_basis = slice_basis(source, target, degree - 1);

    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
    for (std::size_t i = 0; i < slice.boundary_basis.size(); ++i)
        row_index[{slice.boundary_basis[i].source_gen, slice.boundary_basis[i].value}] = i;

    slice.boundary = RationalMatrix(slice.boundary_basis.size(), slice.basis.size());
    for (std::size_t j = 0; j < slice.basis.size(); ++j) {
        auto theta = PhiDerivation::elementary(
            phi, degree, slice.basis[j].source_gen,
            Polynomial::term(target.gens(), slice.basis[j].value, 1));
        auto b = delta(theta);
        for (std::size_t g = 0; g < source.gen_count(); ++g)
            for (const auto& [m, c] : b.value_on(g).terms())
                slice.boundary.at(row_index.at({g, m}), j) = c;
    }
    return slice;
}

DerivationComplexSlice complex_slice(const SullivanAlgebra& source,
                                     const SullivanAlgebra& target, const Morphism& phi,
                                     int degree) {
    if (!phi.source().gens().same_as(source.gens()) ||
        !phi.target().gens().same_as(target.gens()))
        throw DomainMismatchError("complex_slice: morphism does not match the given algebras");
    return complex_slice(std::make_shared<Morphism>(phi), degree);
}

std::optional<PhiDerivation> close_dual(const DerivationComplexSlice& slice,
                                        std::size_t gen_index, std::size_t order_limit,
                                        std::size_t base_count) {
    std::vector<std::size_t> axes;
    std::ptrdiff_t gen_pos = -1;
    for (std::size_t p = 0; p < slice.basis.size(); ++p) {
        const auto& b = slice.basis[p];
        if (b.source_gen == gen_index && b.value.is_unit())
            gen_pos = static_cast<std::ptrdiff_t>(p);
        if (b.value.is_unit() && b.source_gen < base_count && b.source_gen <= order_limit)
            continue;
        axes.push_back(p);
    }
    if (gen_pos < 0) throw InternalError("dual position missing from slice");
    RationalVector rhs(slice.boundary.rows(), Rational(0));
    for (std::size_t r = 0; r < slice.boundary.rows(); ++r)
        rhs[r] = -slice.boundary.at(r, static_cast<std::size_t>(gen_pos));
    auto S = SubspaceBasis::coordinate(slice.basis.size(), axes);
    auto x = solve_affine_in_subspace(slice.boundary, rhs, S);
    if (!x) return std::nullopt;
    return slice.from_coordinates(*x);
}

}  // namespace sullivan
