#pragma once

#include "sullivan/derivation.hpp"
#include "sullivan/extension.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sullivan {

/// A subspace of degree-n dual homotopy classes. For a minimal algebra the
/// boundary space is zero and `space` is an honest subspace of the dual
/// generator slice Hom_n(W, Q); for non-minimal presentations classes are
/// carried by representatives modulo `boundaries` (the coboundaries of the
/// dual of the linear part).
struct DualClasses {
    int degree = 0;
    std::vector<std::size_t> ambient_gens;  // generator indices of this degree
    SubspaceBasis space;                    // representatives + boundaries
    SubspaceBasis boundaries;               // contained in space

    std::size_t dim() const { return space.dim() - boundaries.dim(); }
    std::vector<RationalVector> representatives() const {
        return space.complement_of(boundaries);
    }
    /// Class-level membership of a representative vector.
    bool contains(const RationalVector& v) const { return space.contains(v); }
    bool is_class_zero(const RationalVector& v) const { return boundaries.contains(v); }
};

/// Per-degree collection of dual class subspaces.
struct GradedSubspace {
    std::map<int, DualClasses> per_degree;
    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& [d, c] : per_degree) n += c.dim();
        return n;
    }
};

/// Coboundary subspace of Hom_n(gens, Q) dual to the linear part of d.
SubspaceBasis dual_boundaries(const SullivanAlgebra& alg, int degree);

/// G_n of a Sullivan algebra: duals of degree-n generators (and their
/// combinations) extending to delta-closed self-derivations. Computed on the
/// whole dual slice via the kernel of the boundary matrix. Degree-1 requests
/// are refused when the algebra has degree-1 generators.
DualClasses gottlieb_group(const SullivanAlgebra& alg, int degree);
GradedSubspace gottlieb_group(const SullivanAlgebra& alg, int min_degree, int max_degree);

/// G_n(B, E; f) for the KS-extension of f: duals of base generators extending
/// to delta-closed derivations along the base inclusion. Contains G_n(B).
DualClasses evaluation_subgroup(const KsExtension& ks, int degree);
GradedSubspace evaluation_subgroup(const KsExtension& ks, int min_degree, int max_degree);

struct ObstructionOptions {
    /// Recompute under every permutation of equal-degree base generator
    /// blocks and report discrepancies (small fixtures only).
    bool check_order_permutations = false;
    /// Cross-check the reported span against the image-quotient computed
    /// directly from the definition (needs a minimal base).
    bool definition_cross_check = true;
};

struct GeneratorDiagnostic {
    std::string name;
    std::size_t index = 0;
    int degree = 0;
    bool survives_linear_part = false;  // member of I'
    /// Condition (i): sigma on the total algebra, vanishing on w_j for
    /// j <= i, with delta_E(w_i^* + sigma) = 0.
    bool condition_i = false;
    std::optional<PhiDerivation> sigma;
    /// Condition (ii): no tau on the base with delta_B(w_i^* + tau) = 0.
    bool condition_ii = false;
    std::optional<PhiDerivation> tau_violation;
    bool qualifies = false;
};

struct ObstructionReport {
    std::vector<std::string> base_order;  // the generator order used
    std::vector<std::size_t> surviving;   // I'
    std::vector<GeneratorDiagnostic> diagnostics;
    /// Span of qualifying duals per degree (ambient: degree-n base duals).
    std::map<int, DualClasses> per_degree;
    std::size_t o = 0;  // total dimension

    /// Definition-level cross-check: dim of the image of G_n(E) in
    /// pi_n(B)/G_n(B), when computed (minimal base only).
    std::map<int, std::size_t> direct_dims;
    bool cross_check_ran = false;
    bool cross_check_mismatch = false;

    struct PermutationDiscrepancy {
        std::vector<std::string> order;
        std::size_t o = 0;
        std::string detail;
    };
    std::vector<PermutationDiscrepancy> permutation_discrepancies;
    bool permutation_check_ran = false;

    std::vector<std::string> warnings;
};

/// Obstruction group O(f) of the map presented by the KS-extension, per the
/// surviving-generator conditions evaluated in the declared base order.
ObstructionReport obstruction_group(const KsExtension& ks,
                                    const ObstructionOptions& opts = {});

/// True iff o(f) = 0.
bool is_rg_map(const KsExtension& ks);

/// Direct verdict for a map presented as a DGA morphism M(B) -> M(E):
/// the dual-induced map carries G(E) into G(B) in every degree.
bool is_rg_map(const Morphism& model_of_f);

struct GottliebHomologySlice {
    int degree = 0;
    std::vector<std::size_t> ambient_gens;  // total-algebra gens of the degree
    std::size_t dim = 0;
    std::vector<RationalVector> representatives;
};

/// GH_n of the fibration: Ker(pi_n(f)) / Im(pi_n(j)) inside the evaluation
/// subgroup of the fiber inclusion, computed on the extension read as
/// total algebra -> fiber algebra. Requires a minimal base.
GottliebHomologySlice gottlieb_homology(const KsExtension& ks, int degree);

/// P_n: duals of degree-n generators whose Whitehead pairing, read off the
/// quadratic part of the differential, vanishes against the whole dual slice.
/// Refuses non-minimal algebras.
SubspaceBasis homotopy_center(const SullivanAlgebra& alg, int degree);

struct WMapReport {
    bool verdict = false;
    bool total_was_minimal = true;
    std::vector<std::pair<std::string, std::string>> cancelled_pairs;
    std::vector<std::string> details;
};

/// W-map predicate: the dual-induced map sends the homotopy center of the
/// total space into the center of the base. A non-minimal total algebra is
/// first reduced by cancelling contractible generator pairs; when that
/// reduction is impossible the operation refuses.
WMapReport is_w_map(const KsExtension& ks);

enum class SphericalClass { K1, K2, K3, K4, None };

std::string to_string(SphericalClass c);

/// Classification of an odd spherical generator of the total space:
/// K1 when it comes from the fiber's Gottlieb group, K2 when it represents a
/// Gottlieb homology class, K3 when its image generates the obstruction
/// group, K4 when its image lies in the base Gottlieb group.
SphericalClass classify_generator(const KsExtension& ks, const std::string& dual_name);

}  // namespace sullivan
