#include "sullivan/linalg.hpp"

#include <algorithm>

namespace sullivan {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    RationalVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

RationalVector RationalMatrix::col(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
    if (x.size() != cols_) throw Error("dimension mismatch in matrix-vector product");
    RationalVector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && x[c] != 0) out[r] += at(r, c) * x[c];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw Error("dimension mismatch in matrix product");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (other.at(k, c) != 0) out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q == 0; });
}

RrefResult rref(const RationalMatrix& m) {
    RrefResult res;
    res.reduced = m;
    auto& a = res.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        Rational inv = Rational(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

SubspaceBasis SubspaceBasis::span(std::size_t ambient,
                                  const std::vector<RationalVector>& vectors) {
    SubspaceBasis s(ambient);
    if (vectors.empty()) return s;
    auto r = rref(RationalMatrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
    return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
    SubspaceBasis s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        RationalVector v(ambient, Rational(0));
        v[i] = 1;
        s.basis_.push_back(std::move(v));
    }
    return s;
}

SubspaceBasis SubspaceBasis::coordinate(std::size_t ambient,
                                        const std::vector<std::size_t>& axes) {
    std::vector<std::size_t> sorted = axes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SubspaceBasis s(ambient);
    for (std::size_t i : sorted) {
        RationalVector v(ambient, Rational(0));
        v.at(i) = 1;
        s.basis_.push_back(std::move(v));
    }
    return s;
}

RationalVector SubspaceBasis::reduce(const RationalVector& v) const {
    if (v.size() != ambient_) throw Error("vector/subspace ambient mismatch");
    RationalVector r = v;
    for (const auto& b : basis_) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && b[pivot] == 0) ++pivot;
        if (pivot == ambient_) continue;
        if (r[pivot] == 0) continue;
        Rational f = r[pivot] / b[pivot];
        for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * b[c];
    }
    return r;
}

bool SubspaceBasis::contains(const RationalVector& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const RationalVector& v) { return contains(v); });
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_) throw Error("subspace ambient mismatch");
    std::vector<RationalVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

std::size_t SubspaceBasis::intersection_dim(const SubspaceBasis& other) const {
    return dim() + other.dim() - sum(other).dim();
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_) throw Error("subspace ambient mismatch");
    // alpha, beta with sum_i alpha_i a_i = sum_j beta_j b_j: kernel of
    // [A^T | -B^T] gives the intersection.
    std::size_t ka = dim(), kb = other.dim();
    if (ka == 0 || kb == 0) return SubspaceBasis(ambient_);
    RationalMatrix m(ambient_, ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t r = 0; r < ambient_; ++r) m.at(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t r = 0; r < ambient_; ++r) m.at(r, ka + j) = -other.basis_[j][r];
    auto ker = kernel_basis(m);
    std::vector<RationalVector> vectors;
    for (const auto& k : ker.basis()) {
        RationalVector v(ambient_, Rational(0));
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t r = 0; r < ambient_; ++r) v[r] += k[i] * basis_[i][r];
        vectors.push_back(std::move(v));
    }
    return span(ambient_, vectors);
}

std::vector<RationalVector> SubspaceBasis::complement_of(const SubspaceBasis& sub) const {
    if (!contains(sub)) throw Error("complement_of: subspace not contained");
    std::vector<RationalVector> reps;
    std::vector<RationalVector> seen = sub.basis_;
    SubspaceBasis acc = sub;
    for (const auto& v : basis_) {
        if (acc.contains(v)) continue;
        reps.push_back(v);
        seen.push_back(v);
        acc = SubspaceBasis::span(ambient_, seen);
    }
    return reps;
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RationalVector> vectors;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.reduced.at(i, free_col);
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis::span(m.cols(), vectors);
}

SubspaceBasis image_basis(const RationalMatrix& m) {
    std::vector<RationalVector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    return SubspaceBasis::span(m.rows(), cols);
}

std::optional<RationalVector> solve_affine_in_subspace(const RationalMatrix& A,
                                                       const RationalVector& b,
                                                       const SubspaceBasis& S) {
    if (b.size() != A.rows()) throw Error("rhs/matrix dimension mismatch");
    if (S.ambient() != A.cols()) throw Error("subspace/matrix dimension mismatch");
    // Columns of M are A applied to the basis directions of S; the basis
    // vectors are usually sparse (coordinate subspaces), so sum columns of A
    // over their nonzero entries only.
    std::size_t k = S.dim();
    RationalMatrix aug(A.rows(), k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& s = S.basis()[j];
        for (std::size_t c = 0; c < A.cols(); ++c) {
            if (s[c] == 0) continue;
            for (std::size_t r = 0; r < A.rows(); ++r) {
                const auto& a = A.at(r, c);
                if (a != 0) aug.at(r, j) += a * s[c];
            }
        }
    }
    for (std::size_t r = 0; r < A.rows(); ++r) aug.at(r, k) = b[r];
    auto red = rref(aug);
    // Inconsistent iff the last column is a pivot.
    for (std::size_t c : red.pivot_cols)
        if (c == k) return std::nullopt;
    RationalVector coeffs(k, Rational(0));
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        coeffs[red.pivot_cols[i]] = red.reduced.at(i, k);
    RationalVector x(A.cols(), Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t c = 0; c < A.cols(); ++c) x[c] += coeffs[j] * S.basis()[j][c];
    }
    return x;
}

std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b) {
    return solve_affine_in_subspace(A, b, SubspaceBasis::full(A.cols()));
}

}  // namespace sullivan
