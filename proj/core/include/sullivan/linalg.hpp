#pragma once

#include "sullivan/errors.hpp"
#include "sullivan/rational.hpp"

#include <optional>
#include <vector>

namespace sullivan {

using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals. Desk-scale; no rounding anywhere.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector col(std::size_t c) const;
    RationalMatrix transposed() const;
    RationalVector apply(const RationalVector& x) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    bool is_zero() const;

    bool operator==(const RationalMatrix& other) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// A subspace of Q^ambient held in canonical (RREF) basis form, so equality
/// of subspaces is componentwise equality of the stored vectors.
class SubspaceBasis {
  public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

    static SubspaceBasis span(std::size_t ambient, const std::vector<RationalVector>& vectors);
    static SubspaceBasis full(std::size_t ambient);
    /// Span of the given coordinate axes.
    static SubspaceBasis coordinate(std::size_t ambient, const std::vector<std::size_t>& axes);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RationalVector>& basis() const { return basis_; }

    bool contains(const RationalVector& v) const;
    bool contains(const SubspaceBasis& other) const;
    SubspaceBasis sum(const SubspaceBasis& other) const;
    SubspaceBasis intersect(const SubspaceBasis& other) const;
    std::size_t intersection_dim(const SubspaceBasis& other) const;

    /// Reduce v against the basis; the remainder is zero iff v is contained.
    RationalVector reduce(const RationalVector& v) const;

    /// Canonical representatives spanning a complement of `sub` inside *this;
    /// their classes form a basis of this/sub. Requires sub to be contained.
    std::vector<RationalVector> complement_of(const SubspaceBasis& sub) const;

    bool operator==(const SubspaceBasis& other) const = default;

  private:
    std::size_t ambient_ = 0;
    std::vector<RationalVector> basis_;  // RREF rows, pivots strictly increasing
};

SubspaceBasis kernel_basis(const RationalMatrix& m);
SubspaceBasis image_basis(const RationalMatrix& m);

/// Some x in the subspace S with A*x = b, or nullopt when no such x exists.
/// Solvability is decided exactly by rank comparison of the augmented system;
/// the returned solution is the canonical one with free coordinates zero
/// (earliest basis directions of S preferred).
std::optional<RationalVector> solve_affine_in_subspace(const RationalMatrix& A,
                                                       const RationalVector& b,
                                                       const SubspaceBasis& S);

/// Unconstrained variant: S = full space.
std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b);

}  // namespace sullivan
