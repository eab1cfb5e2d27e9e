#pragma once

#include "sullivan/genset.hpp"
#include "sullivan/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

/// Normal-form monomial: factors sorted by generator index, exponents >= 1,
/// exponent == 1 on odd generators. The sign picked up while sorting a raw
/// factor list is absorbed into the polynomial coefficient.
class Monomial {
  public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (gen index, exponent)

    Monomial() = default;  // the unit monomial 1

    static Monomial unit() { return Monomial(); }
    static Monomial of_gen(const GenSet& gens, std::size_t index);

    /// Build from an unsorted factor list. Returns the normal form and the
    /// Koszul sign of the sort, or nullopt when an odd generator repeats.
    static std::optional<std::pair<Monomial, int>> from_factors(
        const GenSet& gens, const std::vector<std::uint32_t>& raw_factors);

    /// Product of two normal forms; nullopt when it vanishes (odd square).
    static std::optional<std::pair<Monomial, int>> multiply(const GenSet& gens,
                                                            const Monomial& a,
                                                            const Monomial& b);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }
    bool is_linear() const { return factors_.size() == 1 && factors_[0].second == 1; }

    bool contains(std::uint32_t gen_index) const;
    std::uint32_t exponent_of(std::uint32_t gen_index) const;

    /// (degree, then lex on the exponent vector) total order.
    auto operator<=>(const Monomial& other) const = default;

    std::string to_string(const GenSet& gens) const;

  private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Polynomial over Q in a fixed GenSet; terms keyed by normal-form monomials,
/// zero coefficients never stored.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(GenSet domain) : domain_(std::move(domain)) {}

    static Polynomial zero(const GenSet& domain) { return Polynomial(domain); }
    static Polynomial constant(const GenSet& domain, const Rational& c);
    static Polynomial gen(const GenSet& domain, std::size_t index);
    static Polynomial term(const GenSet& domain, Monomial m, const Rational& c);

    const GenSet& domain() const { return domain_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    /// Coefficient of the unit monomial.
    Rational constant_term() const { return coefficient(Monomial::unit()); }

    /// True when every term has the same degree; the unit polynomial 0 is
    /// homogeneous of any degree.
    bool is_homogeneous() const;
    /// Degree when homogeneous and nonzero; nullopt for 0 or mixed terms.
    std::optional<int> homogeneous_degree() const;
    int max_term_degree() const;
    Polynomial homogeneous_component(int degree) const;

    /// The linear part: terms that are a single generator to the first power.
    Polynomial linear_part() const;
    Polynomial decomposable_part() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);

  private:
    void check_domain(const Polynomial& other) const;

    GenSet domain_;
    std::map<Monomial, Rational> terms_;
};

/// mul as a named free function; identical to operator* (graded-commutative,
/// associative, bilinear).
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// All normal-form monomials of the given degree, in canonical order.
std::vector<Monomial> monomial_basis(const GenSet& gens, int degree);

}  // namespace sullivan
