#pragma once

#include "sullivan/morphism.hpp"

#include <vector>

namespace sullivan {

/// Degree +1 linear endomap of the graded span of a generator set,
/// represented by the linear term of a polynomial per generator.
class GradedLinearMap {
  public:
    GradedLinearMap() = default;
    GradedLinearMap(GenSet gens, std::vector<Polynomial> linear_values);

    const GenSet& gens() const { return gens_; }
    const Polynomial& value_on(std::size_t gen_index) const { return values_.at(gen_index); }

    /// Matrix from degree-d generators to degree-(d+1) generators.
    RationalMatrix matrix(int degree) const;
    bool is_zero() const;

  private:
    GenSet gens_;
    std::vector<Polynomial> values_;
};

/// A KS-extension (Lambda W, d_B) -> (Lambda W (x) Lambda V, D) with
/// D restricted to W equal to d_B. Models a map f: E -> B; the quotient
/// (Lambda V, D-bar) models the homotopy fiber.
class KsExtension {
  public:
    KsExtension() = default;
    /// fiber_gens are appended after the base generators; total_differentials
    /// are indexed over base-then-fiber generators and must restrict to the
    /// base differential on the base prefix.
    KsExtension(SullivanAlgebra base, std::vector<Generator> fiber_gens,
                std::vector<Polynomial> total_differentials);
    /// From an explicit total algebra whose first base_count generators carry
    /// the base differential.
    static KsExtension from_total(SullivanAlgebra base, SullivanAlgebra total);

    const SullivanAlgebra& base() const { return base_; }
    const SullivanAlgebra& total() const { return total_; }
    std::size_t base_count() const { return base_.gen_count(); }
    std::size_t fiber_count() const { return total_.gen_count() - base_.gen_count(); }

    /// The fiber algebra (Lambda V, D-bar): base variables set to zero.
    SullivanAlgebra fiber() const;
    /// The inclusion (Lambda W, d_B) -> total.
    Morphism base_inclusion() const;
    /// The projection total -> fiber killing W.
    Morphism fiber_projection() const;

    bool operator==(const KsExtension& other) const;

  private:
    SullivanAlgebra base_;
    SullivanAlgebra total_;
};

/// Base validity, D|_W = d_B (by construction), D*D = 0, fiber warnings.
ValidationReport validate(const KsExtension& ks);

/// The composite's KS-extension: `inner` must be an extension whose base is
/// `outer`'s total algebra; the result adjoins inner's fiber after outer's,
/// keeping outer's base.
KsExtension compose_ks(const KsExtension& outer, const KsExtension& inner);

/// Push-out of the extension along a base morphism: fiber generators kept,
/// their differentials substituted through the morphism.
KsExtension pullback_model(const KsExtension& ks, const Morphism& base_map);

/// Q(D): the linear part of the total differential on the span of W + V.
GradedLinearMap linear_part(const KsExtension& ks);

/// Indices of base generators whose classes survive in H(W + V, Q(D)):
/// Q(D)-closed and not a Q(D)-image.
std::vector<std::size_t> surviving_base_indices(const KsExtension& ks);

}  // namespace sullivan
