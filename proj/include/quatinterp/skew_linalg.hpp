#pragma once

#include <cstddef>
#include <vector>

#include "quatinterp/quaternion.hpp"

namespace quatinterp {

/// Rectangular quaternion matrix, row major. Acts on right-module columns u
/// by (A u)_j = sum_k A(j,k) u_k, i.e. coefficients multiply unknowns from
/// the left.
class QuatMatrix {
public:
    QuatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Quaternion::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    static QuatMatrix identity(std::size_t n) {
        QuatMatrix m(n, n);
        for (std::size_t d = 0; d < n; ++d) m(d, d) = Quaternion::one();
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Quaternion> entries_;
};

using QuatColumn = std::vector<Quaternion>;

/// Solves A u = b for the right-module unknown column u by Gauss elimination
/// with left-acting row operations and norm partial pivoting. Throws
/// singular-system when a pivot falls below tol.eps times the largest initial
/// entry norm, or when the final residual exceeds tol.eps * (1 + max|b|).
QuatColumn gauss_solve(const QuatMatrix& A, const QuatColumn& b, Tolerance tol = {});

/// Number of pivots found by elimination; equals the dimension of the right
/// span of the columns of A (and of the left span of its rows).
std::size_t rank(const QuatMatrix& A, Tolerance tol = {});

} // namespace quatinterp
