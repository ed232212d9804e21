#include "quatinterp/hz_interp.hpp"

#include <sstream>
#include <stdexcept>

#include "quatinterp/errors.hpp"
#include "quatinterp/skew_linalg.hpp"

namespace quatinterp {

bool unisolvent_hz(const PointSet& pts) {
    return pts.max_class_size() <= 2;
}

QuatMatrix left_vandermonde(const PointSet& pts) {
    const std::size_t n = pts.size();
    QuatMatrix A(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Quaternion p = Quaternion::one();
        for (std::size_t c = 0; c < n; ++c) {
            A(r, c) = p;
            p = p * pts[r];
        }
    }
    return A;
}

FormalPoly interpolate_hz(const PointSet& pts, const std::vector<Quaternion>& values) {
    if (values.size() != pts.size()) {
        throw std::invalid_argument("one value per interpolation point required");
    }
    if (!unisolvent_hz(pts)) {
        throw MathError(ErrorReason::NotUnisolvent,
                        "three of the points are similar; interpolation from H[z] fails");
    }
    const QuatColumn u = gauss_solve(left_vandermonde(pts), values, pts.tolerance());
    return FormalPoly(u);
}

double similar_dependency_residual(const Quaternion& a, const Quaternion& b,
                                   const Quaternion& c, const FormalPoly& f,
                                   Tolerance tol) {
    const bool pairwise_similar =
        similar(a, b, tol) && similar(a, c, tol) && similar(b, c, tol);
    const double sep = std::min({abs(a - b), abs(a - c), abs(b - c)});
    if (!pairwise_similar || sep <= tol.eps) {
        throw MathError(ErrorReason::PreconditionViolation,
                        "points must be pairwise distinct and mutually similar");
    }
    const Quaternion lhs = eval_left(f, c);
    const Quaternion rhs = (c - b) * inverse(a - b) * eval_left(f, a) +
                           (c - a) * inverse(b - a) * eval_left(f, b);
    return abs(lhs - rhs);
}

std::pair<FormalPoly, Quaternion> newton_extend_hz(const FormalPoly& prev,
                                                   const PointSet& prev_pts,
                                                   const Quaternion& new_pt,
                                                   const Quaternion& new_val) {
    const FormalPoly w = annihilator_hz(prev_pts);
    const Quaternion c = eval_left(w, new_pt);
    double scale = 0.0;
    double apow = 1.0;
    for (const Quaternion& wj : w.coeffs()) {
        scale += apow * abs(wj);
        apow *= abs(new_pt);
    }
    if (abs(c) <= prev_pts.tolerance().eps * std::max(1.0, scale)) {
        throw MathError(ErrorReason::NotUnisolvent,
                        "annihilator vanishes at the new point; extended set is not unisolvent");
    }
    const FormalPoly w_unit = scale_right(w, inverse(c));
    const Quaternion d = new_val - eval_left(prev, new_pt);
    return {prev + scale_right(w_unit, d), d};
}

} // namespace quatinterp
