#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "quatinterp/point_set.hpp"
#include "quatinterp/txyz_poly.hpp"

namespace quatinterp {

/// The two order-independent constructions of the Lagrange polynomials.
enum class LagrangeChoice {
    /// l_j = p * p(x_j)^{-1} with p the symmetrized annihilator of the other
    /// points; fails when p(x_j) = 0.
    QuotientNormalized = 1,
    /// l_j = (1/n!) sum over orderings of the per-factor quotients
    /// (x - y)(x_j - y)^{-1}, factors multiplied in ascending order.
    SymmetrizedFactors = 2,
};

struct LagrangeBasis {
    std::vector<Quaternion> points;
    LagrangeChoice choice;
    std::vector<TxyzPoly> polys; ///< l_j(x_k) = delta_jk, one per point.
};

/// Order-independent degree-n polynomial vanishing at the given points:
/// the average over all orderings of the product of the linear factors
/// x - x_m. Supports at most 6 points (factorial enumeration).
TxyzPoly sym_annihilator(std::span<const Quaternion> points);

LagrangeBasis lagrange_basis(const PointSet& pts, LagrangeChoice choice);

/// Max coefficient norm of (sum_j polys[j]) - 1. The Lagrange polynomials of
/// either choice need not form a partition of unity; this measures the defect.
double partition_of_unity_defect(const std::vector<TxyzPoly>& polys);

/// L f = sum_j l_j * f(x_j); H-linear in the values and independent of the
/// ordering of the points.
TxyzPoly interpolate_sym(const PointSet& pts, const std::vector<Quaternion>& values,
                         LagrangeChoice choice);

/// Interpolation of real data by the real parts of the Lagrange polynomials:
/// L f = sum_j Re(l_j) * f(x_j).
TxyzPoly real_interpolate(const PointSet& pts, const std::vector<double>& values,
                          LagrangeChoice choice);

/// Update polynomial used by the Newton step.
enum class NewtonPivot {
    Annihilator, ///< symmetrized annihilator of the previous points
    Lagrange,    ///< l_n of the extended point set (symmetrized factors)
};

/// Newton step L_n = L_{n-1} + p_n * d with p_n(x_j) = delta_jn. Returns the
/// extended interpolant and the divided difference d, which is H-linear in
/// the data. Throws degenerate-configuration when p_n(new_pt) = 0.
std::pair<TxyzPoly, Quaternion> newton_step_sym(const TxyzPoly& prev,
                                                const PointSet& prev_pts,
                                                const Quaternion& new_pt,
                                                const Quaternion& new_val,
                                                NewtonPivot pivot);

/// Unique interpolant from span{1, q, iq, jq, kq} at five points that are
/// affinely independent in R^4; at the nodes 0,1,i,j,k it reproduces
/// (1-t-x-y-z)f(0) + t f(1) + x f(i) + y f(j) + z f(k).
TxyzPoly barycentric_linear(std::span<const Quaternion> pts5,
                            std::span<const Quaternion> values5, Tolerance tol = {});

/// Cayley-Dickson split q = v + jw with v = t+ix and w = y-iz, computed both
/// from the coordinates and from the half-sum identities v = (q - iqi)/2,
/// w = (-jq + kqi)/2.
std::pair<std::complex<double>, std::complex<double>> cayley_dickson(const Quaternion& q);

} // namespace quatinterp
