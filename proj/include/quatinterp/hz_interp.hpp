#pragma once

#include <utility>
#include <vector>

#include "quatinterp/formal_poly.hpp"
#include "quatinterp/point_set.hpp"
#include "quatinterp/quaternion.hpp"
#include "quatinterp/skew_linalg.hpp"

namespace quatinterp {

/// Left Lagrange interpolation from degree n polynomials in H[z] at n+1
/// points exists uniquely iff no three of the points are similar, i.e. every
/// similarity class holds at most two of them.
bool unisolvent_hz(const PointSet& pts);

/// Builds the left Vandermonde A[j][k] = (x_j)^k with coefficients to the left
/// of the right-module unknown column.
QuatMatrix left_vandermonde(const PointSet& pts);

/// Unique polynomial of degree <= n with eval_left(p, x_j) = values[j],
/// obtained by Gauss elimination on the left Vandermonde system.
FormalPoly interpolate_hz(const PointSet& pts, const std::vector<Quaternion>& values);

/// For a, b, c pairwise distinct and mutually similar, the left evaluations
/// obey f(c) = (c-b)(a-b)^{-1} f(a) + (c-a)(b-a)^{-1} f(b); returns the
/// absolute defect of that identity for the given f.
double similar_dependency_residual(const Quaternion& a, const Quaternion& b,
                                   const Quaternion& c, const FormalPoly& f,
                                   Tolerance tol = {});

/// Newton-form extension: p = prev + w*d with w the annihilator of the
/// previous points scaled so eval_left(w, new_pt) = 1, which makes the
/// divided difference d = new_val - eval_left(prev, new_pt). Returns (p, d).
std::pair<FormalPoly, Quaternion> newton_extend_hz(const FormalPoly& prev,
                                                   const PointSet& prev_pts,
                                                   const Quaternion& new_pt,
                                                   const Quaternion& new_val);

} // namespace quatinterp
