#pragma once

#include "sullivan/gottlieb.hpp"

#include <string>

namespace sullivan {

/// "w1* + 2*w2*" for a coordinate vector over the duals of the listed
/// generator indices.
std::string render_dual(const RationalVector& v, const std::vector<std::size_t>& ambient_gens,
                        const GenSet& gens);

/// Comma-separated rendering of a class subspace by its representatives.
std::string render_classes(const DualClasses& classes, const GenSet& gens);

/// "(u, v1) + 2*(w2, w1*w2)" elementary-coordinate rendering.
std::string render_derivation(const PhiDerivation& theta);

}  // namespace sullivan
