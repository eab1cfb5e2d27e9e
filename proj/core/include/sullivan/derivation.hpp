#pragma once

#include "sullivan/morphism.hpp"

#include <memory>
#include <vector>

namespace sullivan {

/// A phi-derivation of degree n along a DGA morphism phi: A -> B: a linear
/// map A -> B lowering degree by n with
///   theta(xy) = theta(x) phi(y) + (-1)^{n|x|} phi(x) theta(y).
/// Determined by its values on generators. Degrees n >= 1 are the chain-level
/// objects; degree 0 is supported as an unvalidated variant for the
/// change-of-basis automorphisms.
class PhiDerivation {
  public:
    PhiDerivation() = default;
    PhiDerivation(std::shared_ptr<const Morphism> along, int degree,
                  std::vector<Polynomial> values);

    /// The elementary derivation (v, h): v to h, all other generators to 0.
    /// Requires h homogeneous with |h| = |v| - n.
    static PhiDerivation elementary(std::shared_ptr<const Morphism> along, int degree,
                                    std::size_t source_gen, Polynomial h);
    static PhiDerivation zero(std::shared_ptr<const Morphism> along, int degree);

    const Morphism& along() const { return *along_; }
    std::shared_ptr<const Morphism> along_ptr() const { return along_; }
    int degree() const { return degree_; }
    const Polynomial& value_on(std::size_t source_gen) const { return values_.at(source_gen); }
    const std::vector<Polynomial>& values() const { return values_; }
    bool is_zero() const;

    /// Extend to an arbitrary polynomial by the twisted Leibniz rule.
    Polynomial apply(const Polynomial& p) const;

    PhiDerivation operator+(const PhiDerivation& other) const;
    PhiDerivation operator-(const PhiDerivation& other) const;
    PhiDerivation scaled(const Rational& c) const;

    bool operator==(const PhiDerivation& other) const;

  private:
    std::shared_ptr<const Morphism> along_;
    int degree_ = 0;
    std::vector<Polynomial> values_;  // indexed by source generator
};

/// The boundary delta(theta) = d_B o theta - (-1)^{|theta|} theta o d_A,
/// a derivation of degree |theta| - 1 along the same morphism.
PhiDerivation delta(const PhiDerivation& theta);

/// One degree of the derivation complex Der(A, B; phi) with its boundary.
struct DerivationComplexSlice {
    struct BasisElement {
        std::size_t source_gen;  // index in A
        Monomial value;          // monomial of B in degree |gen| - n
    };

    int degree = 0;
    std::shared_ptr<const Morphism> along;
    std::vector<BasisElement> basis;           // canonical (gen, monomial) order
    std::vector<BasisElement> boundary_basis;  // basis of the slice one lower
    /// Matrix of delta from this slice to the one below: rows indexed by
    /// boundary_basis, columns by basis.
    RationalMatrix boundary;

    PhiDerivation from_coordinates(const RationalVector& coords) const;
    RationalVector to_coordinates(const PhiDerivation& theta) const;
    /// Coordinate positions of the elementary duals (g, 1) for |g| = degree,
    /// listed in the order of source degree-n generators.
    std::vector<std::ptrdiff_t> dual_positions() const;
};

/// Basis and boundary of Der_n(A, B; phi). Finite because every generator
/// degree is >= 1. Requires n >= 1.
DerivationComplexSlice complex_slice(const SullivanAlgebra& source,
                                     const SullivanAlgebra& target, const Morphism& phi,
                                     int degree);
DerivationComplexSlice complex_slice(std::shared_ptr<const Morphism> phi, int degree);

/// Find sigma with delta(gen^* + sigma) = 0 and sigma vanishing on the
/// source generators j <= order_limit among the first base_count (the
/// per-generator condition of the obstruction computation). The canonical
/// solution with earliest-position support is returned, or nullopt.
std::optional<PhiDerivation> close_dual(const DerivationComplexSlice& slice,
                                        std::size_t gen_index, std::size_t order_limit,
                                        std::size_t base_count);

}  // namespace sullivan
