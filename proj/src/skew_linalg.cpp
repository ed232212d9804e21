#include "quatinterp/skew_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quatinterp/errors.hpp"

namespace quatinterp {

namespace {

double max_entry_norm(const QuatMatrix& A) {
    double m = 0.0;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) m = std::max(m, abs(A(r, c)));
    }
    return m;
}

} // namespace

QuatColumn gauss_solve(const QuatMatrix& A, const QuatColumn& b, Tolerance tol) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("gauss_solve needs a square matrix");
    if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");

    QuatMatrix work = A;
    QuatColumn rhs = b;
    const double pivot_floor = tol.eps * std::max(1.0, max_entry_norm(A));

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (abs(work(r, col)) > abs(work(best, col))) best = r;
        }
        if (abs(work(best, col)) <= pivot_floor) {
            std::ostringstream msg;
            msg << "pivot below threshold in column " << col;
            throw MathError(ErrorReason::SingularSystem, msg.str());
        }
        if (best != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(work(col, c), work(best, c));
            std::swap(rhs[col], rhs[best]);
        }
        const Quaternion pivot_inv = inverse(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(work(r, col))) continue;
            const Quaternion factor = work(r, col) * pivot_inv;
            for (std::size_t c = col; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
            }
            rhs[r] -= factor * rhs[col];
        }
    }

    QuatColumn u(n, Quaternion::zero());
    for (std::size_t rr = n; rr-- > 0;) {
        Quaternion acc = rhs[rr];
        for (std::size_t c = rr + 1; c < n; ++c) acc -= work(rr, c) * u[c];
        u[rr] = inverse(work(rr, rr)) * acc;
    }

    double bnorm = 0.0;
    for (const Quaternion& v : b) bnorm = std::max(bnorm, abs(v));
    double residual = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        Quaternion acc = -b[r];
        for (std::size_t c = 0; c < n; ++c) acc += A(r, c) * u[c];
        residual = std::max(residual, abs(acc));
    }
    if (residual >= tol.eps * (1.0 + bnorm)) {
        std::ostringstream msg;
        msg << "solution residual " << residual << " exceeds tolerance";
        throw MathError(ErrorReason::SingularSystem, msg.str());
    }
    return u;
}

std::size_t rank(const QuatMatrix& A, Tolerance tol) {
    QuatMatrix work = A;
    const double pivot_floor = tol.eps * std::max(1.0, max_entry_norm(A));
    std::size_t pivots = 0;

    for (std::size_t col = 0; col < work.cols() && pivots < work.rows(); ++col) {
        std::size_t best = pivots;
        for (std::size_t r = pivots + 1; r < work.rows(); ++r) {
            if (abs(work(r, col)) > abs(work(best, col))) best = r;
        }
        if (abs(work(best, col)) <= pivot_floor) continue;
        if (best != pivots) {
            for (std::size_t c = 0; c < work.cols(); ++c) {
                std::swap(work(pivots, c), work(best, c));
            }
        }
        const Quaternion pivot_inv = inverse(work(pivots, col));
        for (std::size_t r = pivots + 1; r < work.rows(); ++r) {
            if (is_zero(work(r, col))) continue;
            const Quaternion factor = work(r, col) * pivot_inv;
            for (std::size_t c = col; c < work.cols(); ++c) {
                work(r, c) -= factor * work(pivots, c);
            }
        }
        ++pivots;
    }
    return pivots;
}

} // namespace quatinterp
