#pragma once

#include "sullivan/gottlieb.hpp"

namespace sullivan {

/// One stage of the change of basis: the generator split off and the witness
/// derivation found on the stage's conjugated differential.
struct StageWitness {
    std::string generator;
    PhiDerivation sigma;  // delta(w^* - sigma) = 0 at its stage
};

/// Witnesses the product decomposition of the total space: the composed
/// automorphism identifies (factored total, split generators free and closed)
/// with the original presentation.
struct SplittingCertificate {
    KsExtension original;
    std::vector<std::string> split_names;   // w_1 .. w_k in splitting order
    std::vector<std::size_t> split_indices;
    std::vector<StageWitness> witnesses;
    /// Same generator set as original.total() with the conjugated
    /// differential; never mentions the split generators.
    SullivanAlgebra factored;
    /// phi_1 o ... o phi_k: (factored) -> (original total), a DGA-isomorphism.
    Morphism automorphism;
    Morphism inverse;

    std::size_t k() const { return split_names.size(); }
};

/// Witness sigma for one generator against the extension as given:
/// sigma(w_j) = 0 for j <= i and delta_E(w_i^* - sigma) = 0, or nullopt when
/// no such derivation exists. Refuses even or non-closed generators.
std::optional<PhiDerivation> find_witness(const KsExtension& ks,
                                          const std::string& generator);

/// Iterated change of basis over the named base generators, finding a witness
/// at each stage on the conjugated differential. phi_i(x) = x - (-1)^|x|
/// sigma_i(x) w_i with the parity-fixed sign that makes phi_i multiplicative.
SplittingCertificate change_of_basis(const KsExtension& ks,
                                     const std::vector<std::string>& generators);

/// Same, but with caller-provided witnesses used verbatim per stage; an
/// internal-consistency error is raised when the conjugated differential
/// still mentions a split generator (bad sign or invalid witness).
SplittingCertificate change_of_basis(const KsExtension& ks,
                                     const std::vector<StageWitness>& witnesses);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks on every generator: automorphism o D_factored = D_original o
/// automorphism, automorphism o inverse = id, D_factored^2 = 0, and
/// freedom of the factored differential from the split generators.
CertificateCheck verify_certificate(const SplittingCertificate& cert);

struct PullbackReport {
    KsExtension model;       // extension of f_a over the quotient base
    Morphism base_quotient;  // original base -> quotient base
    std::size_t o_f = 0;     // o of the original map
    std::size_t o_fa = 0;    // o of the pulled-back map
    bool bound_satisfied = true;  // o_fa <= o_f - k
};

/// Model of the pull-back fibration associated to the split generators: the
/// push-out of the extension along the quotient killing them. Reports o(f_a)
/// and checks o(f_a) <= o(f) - k.
PullbackReport associated_pullback(const KsExtension& ks, const SplittingCertificate& cert);

}  // namespace sullivan
