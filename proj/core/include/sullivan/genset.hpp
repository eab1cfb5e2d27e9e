#pragma once

#include "sullivan/errors.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sullivan {

/// A graded generator. Odd-degree generators are exterior (square zero),
/// even-degree generators are polynomial.
struct Generator {
    std::string name;
    int degree = 0;

    bool is_odd() const { return degree % 2 != 0; }
    bool operator==(const Generator& other) const = default;
};

/// Immutable ordered set of generators. The declaration order is the total
/// order used for monomial normal forms and for the per-generator conditions
/// of the obstruction computation. Polynomials hold a handle to their GenSet
/// so that mixing domains is detected.
class GenSet {
  public:
    GenSet() = default;
    explicit GenSet(std::vector<Generator> gens);

    static GenSet concat(const GenSet& a, const GenSet& b);

    std::size_t size() const { return data_ ? data_->gens.size() : 0; }
    const Generator& gen(std::size_t i) const { return data_->gens.at(i); }
    const std::vector<Generator>& gens() const { return data_->gens; }
    int degree(std::size_t i) const { return gen(i).degree; }
    const std::string& name(std::size_t i) const { return gen(i).name; }

    /// Index of a named generator, or -1.
    int index_of(const std::string& name) const;

    /// Generator indices of a given degree, in declaration order.
    std::vector<std::size_t> indices_of_degree(int degree) const;

    int max_degree() const;
    bool has_degree_one() const;

    /// Same underlying object, or structurally equal generator lists.
    bool same_as(const GenSet& other) const;
    bool valid() const { return static_cast<bool>(data_); }

  private:
    struct Data {
        std::vector<Generator> gens;
        std::map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace sullivan
