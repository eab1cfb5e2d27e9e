#pragma once

#include "sullivan/derivation.hpp"
#include "sullivan/extension.hpp"

#include <set>
#include <string>

namespace sullivan::testing {

/// Koszul-signed formal partial derivative of p by the generator v.
Polynomial partial_derivative(const Polynomial& p, std::size_t v);

/// delta of the elementary derivation (v, h) computed through the expansion
///   delta(v, h) = (v, d'h) - sum_i s_i (u_i, phi(d(du_i)/dv) * h),
/// an independent route from the commutator implementation.
PhiDerivation oracle_delta_elementary(std::shared_ptr<const Morphism> phi, int degree,
                                      std::size_t v, const Polynomial& h);

/// Literal condition chase for the obstruction group: surviving generators,
/// then existence of the closing/violating derivations decided by an
/// independent elimination over an independently enumerated basis.
struct OracleObstruction {
    std::set<std::string> qualifying;
    std::size_t o = 0;
};
OracleObstruction oracle_obstruction(const KsExtension& ks);

/// Brute-force Gottlieb homology dimension via the definition.
std::size_t oracle_gottlieb_homology_dim(const KsExtension& ks, int degree);

}  // namespace sullivan::testing
