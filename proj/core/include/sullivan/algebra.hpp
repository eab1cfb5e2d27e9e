#pragma once

#include "sullivan/linalg.hpp"
#include "sullivan/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sullivan {

struct ValidationFinding {
    enum class Severity { error, warning };
    Severity severity;
    std::string code;     // stable identifier, e.g. "d-squared"
    std::string subject;  // usually a generator name
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;

    bool valid() const {
        for (const auto& f : findings)
            if (f.severity == ValidationFinding::Severity::error) return false;
        return true;
    }
    void add(ValidationFinding::Severity sev, std::string code, std::string subject,
             std::string message) {
        findings.push_back({sev, std::move(code), std::move(subject), std::move(message)});
    }
};

/// A free graded-commutative Q-algebra with ordered generators and a
/// differential given by its values on generators, extended by the signed
/// Leibniz rule d(xy) = d(x)y + (-1)^|x| x d(y).
class SullivanAlgebra {
  public:
    SullivanAlgebra() = default;
    /// Differentials indexed like the generators; missing entries mean zero.
    SullivanAlgebra(GenSet gens, std::vector<Polynomial> differentials);

    static SullivanAlgebra free(GenSet gens);  // zero differential

    const GenSet& gens() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }
    const Polynomial& d_of(std::size_t gen_index) const { return d_.at(gen_index); }
    const std::vector<Polynomial>& differentials() const { return d_; }

    /// Extend the generator differential to an arbitrary polynomial.
    Polynomial apply_d(const Polynomial& p) const;

    /// d has no linear terms on any generator.
    bool is_minimal() const;
    /// Finite generator list, d(odd) in the even subalgebra, d(even) = 0.
    bool is_pure() const;

    bool operator==(const SullivanAlgebra& other) const;

  private:
    GenSet gens_;
    std::vector<Polynomial> d_;
};

/// Checks the axioms: degree +1 differentials, d*d = 0 on every generator,
/// generator order nondecreasing in degree. Degree-1 generators produce a
/// warning, not an error.
ValidationReport validate(const SullivanAlgebra& alg, bool check_ordering = true);

struct CohomologyResult {
    /// dims[k] = dim H^k for 0 <= k <= max_degree.
    std::vector<std::size_t> dims;
    /// Cocycle representatives for each degree.
    std::vector<std::vector<Polynomial>> representatives;
};

/// Additive cohomology of (alg, d) in degrees 0..max_degree. The bound is
/// required; the engine never guesses finiteness.
CohomologyResult cohomology(const SullivanAlgebra& alg, int max_degree);

/// The matrix of d restricted to degree `degree`, written in the monomial
/// bases of that degree and degree+1.
RationalMatrix differential_matrix(const SullivanAlgebra& alg, int degree);

struct Minimalization {
    SullivanAlgebra minimal;
    /// Images of the original generators inside the reduced algebra.
    std::vector<Polynomial> gen_images;
    /// Names of the cancelled (fiber-side, base-side) generator pairs.
    std::vector<std::pair<std::string, std::string>> cancelled;
};

/// Reduce a free Sullivan algebra to a minimal one by cancelling contractible
/// generator pairs (v, x) with d(v) = c*x + r, r independent of v and x. The
/// projection is a quasi-isomorphism. Throws RefusalError when some linear
/// term cannot be cancelled this way.
Minimalization minimalize(const SullivanAlgebra& alg);

}  // namespace sullivan
