#pragma once

#include "sullivan/algebra.hpp"

#include <vector>

namespace sullivan {

/// A DGA morphism between Sullivan algebras, determined by generator images.
class Morphism {
  public:
    Morphism() = default;
    Morphism(SullivanAlgebra source, SullivanAlgebra target, std::vector<Polynomial> images);

    static Morphism identity(const SullivanAlgebra& alg);
    /// The inclusion of an algebra whose generators form a prefix of the
    /// target's generator list (used for KS-extension base inclusions).
    static Morphism prefix_inclusion(const SullivanAlgebra& source,
                                     const SullivanAlgebra& target);

    const SullivanAlgebra& source() const { return source_; }
    const SullivanAlgebra& target() const { return target_; }
    const Polynomial& image_of(std::size_t source_gen) const { return images_.at(source_gen); }

    /// Apply as an algebra map (substitute generator images).
    Polynomial apply(const Polynomial& p) const;

    /// Matrix of the linear part in a fixed degree: source degree-d generator
    /// duals on columns, target degree-d generators on rows.
    RationalMatrix linear_part_matrix(int degree) const;

    Morphism then(const Morphism& next) const;  // next after this

    bool operator==(const Morphism& other) const;

  private:
    SullivanAlgebra source_, target_;
    std::vector<Polynomial> images_;
};

/// Degree preservation and d-commutation on every generator.
ValidationReport validate(const Morphism& phi);

}  // namespace sullivan
