#include "sullivan/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sullivan {

Monomial Monomial::of_gen(const GenSet& gens, std::size_t index) {
    Monomial m;
    m.factors_.push_back({static_cast<std::uint32_t>(index), 1});
    m.degree_ = gens.degree(index);
    return m;
}

std::optional<std::pair<Monomial, int>> Monomial::from_factors(
    const GenSet& gens, const std::vector<std::uint32_t>& raw_factors) {
    // Insertion sort counting transpositions of odd-degree factors.
    std::vector<std::uint32_t> sorted;
    sorted.reserve(raw_factors.size());
    int sign = 1;
    for (std::uint32_t f : raw_factors) {
        bool f_odd = gens.degree(f) % 2 != 0;
        std::size_t pos = sorted.size();
        while (pos > 0 && sorted[pos - 1] > f) --pos;
        if (f_odd) {
            int odd_passed = 0;
            for (std::size_t j = pos; j < sorted.size(); ++j)
                if (gens.degree(sorted[j]) % 2 != 0) ++odd_passed;
            if (odd_passed % 2 != 0) sign = -sign;
        }
        sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), f);
    }
    Monomial m;
    for (std::uint32_t f : sorted) {
        if (!m.factors_.empty() && m.factors_.back().first == f) {
            if (gens.gen(f).is_odd()) return std::nullopt;  // exterior square
            m.factors_.back().second += 1;
        } else {
            m.factors_.push_back({f, 1});
        }
        m.degree_ += gens.degree(f);
    }
    return std::make_pair(std::move(m), sign);
}

std::optional<std::pair<Monomial, int>> Monomial::multiply(const GenSet& gens,
                                                           const Monomial& a,
                                                           const Monomial& b) {
    // Merge sorted factor lists. Moving a factor of b into place passes all
    // remaining factors of a to its right; only odd-odd passes flip the sign.
    Monomial m;
    m.degree_ = a.degree_ + b.degree_;
    int sign = 1;

    // Suffix count of odd factors of a (with multiplicity) from position i on.
    std::vector<int> odd_suffix(a.factors_.size() + 1, 0);
    for (std::size_t i = a.factors_.size(); i-- > 0;) {
        const auto& [g, e] = a.factors_[i];
        odd_suffix[i] = odd_suffix[i + 1] + (gens.gen(g).is_odd() ? static_cast<int>(e) : 0);
    }

    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        bool take_b = i == a.factors_.size() ||
                      (j < b.factors_.size() && b.factors_[j].first < a.factors_[i].first);
        if (take_b) {
            const auto& [g, e] = b.factors_[j];
            if (gens.gen(g).is_odd() && (odd_suffix[i] % 2) != 0) sign = -sign;
            m.factors_.push_back({g, e});
            ++j;
        } else if (j < b.factors_.size() && a.factors_[i].first == b.factors_[j].first) {
            const auto& [g, ea] = a.factors_[i];
            auto eb = b.factors_[j].second;
            if (gens.gen(g).is_odd()) return std::nullopt;
            m.factors_.push_back({g, ea + eb});
            ++i;
            ++j;
        } else {
            m.factors_.push_back(a.factors_[i]);
            ++i;
        }
    }
    return std::make_pair(std::move(m), sign);
}

bool Monomial::contains(std::uint32_t gen_index) const {
    return exponent_of(gen_index) != 0;
}

std::uint32_t Monomial::exponent_of(std::uint32_t gen_index) const {
    for (const auto& [g, e] : factors_)
        if (g == gen_index) return e;
    return 0;
}

std::string Monomial::to_string(const GenSet& gens) const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << gens.name(g);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

Polynomial Polynomial::constant(const GenSet& domain, const Rational& c) {
    Polynomial p(domain);
    p.add_term(Monomial::unit(), c);
    return p;
}

Polynomial Polynomial::gen(const GenSet& domain, std::size_t index) {
    Polynomial p(domain);
    p.add_term(Monomial::of_gen(domain, index), 1);
    return p;
}

Polynomial Polynomial::term(const GenSet& domain, Monomial m, const Rational& c) {
    Polynomial p(domain);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
}

int Polynomial::max_term_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    Polynomial out(domain_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::linear_part() const {
    Polynomial out(domain_);
    for (const auto& [m, c] : terms_)
        if (m.is_linear()) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::decomposable_part() const {
    Polynomial out(domain_);
    for (const auto& [m, c] : terms_)
        if (!m.is_linear() && !m.is_unit()) out.add_term(m, c);
    return out;
}

void Polynomial::check_domain(const Polynomial& other) const {
    if (!domain_.valid() || !other.domain_.valid()) return;
    if (!domain_.same_as(other.domain_))
        throw DomainMismatchError("polynomials over different generator sets");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(domain_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_domain(other);
    Polynomial out = *this;
    if (!out.domain_.valid()) out.domain_ = other.domain_;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_domain(other);
    if (!domain_.valid()) domain_ = other.domain_;
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_domain(other);
    Polynomial out(domain_.valid() ? domain_ : other.domain_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            auto prod = Monomial::multiply(out.domain_, ma, mb);
            if (!prod) continue;
            out.add_term(prod->first, ca * cb * prod->second);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(domain_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial out = Polynomial::constant(domain_, 1);
    for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return terms_ == other.terms_;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) {
            os << sullivan::to_string(a);
        } else {
            if (a != 1) os << sullivan::to_string(a) << "*";
            os << m.to_string(domain_);
        }
    }
    return os.str();
}

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

namespace {
void enumerate_monomials(const GenSet& gens, int degree, std::size_t from,
                         std::vector<std::uint32_t>& stack, std::vector<Monomial>& out) {
    if (degree == 0) {
        auto m = Monomial::from_factors(gens, stack);
        out.push_back(m->first);
        return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
        int d = gens.degree(i);
        if (d > degree) continue;
        std::uint32_t max_exp = gens.gen(i).is_odd() ? 1u : static_cast<std::uint32_t>(degree / d);
        for (std::uint32_t e = 1; e <= max_exp; ++e) {
            for (std::uint32_t k = 0; k < e; ++k) stack.push_back(static_cast<std::uint32_t>(i));
            enumerate_monomials(gens, degree - static_cast<int>(e) * d, i + 1, stack, out);
            for (std::uint32_t k = 0; k < e; ++k) stack.pop_back();
        }
    }
}
}  // namespace

std::vector<Monomial> monomial_basis(const GenSet& gens, int degree) {
    if (degree < 0) return {};
    if (degree == 0) return {Monomial::unit()};
    std::vector<Monomial> out;
    std::vector<std::uint32_t> stack;
    enumerate_monomials(gens, degree, 0, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sullivan
