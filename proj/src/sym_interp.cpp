#include "quatinterp/sym_interp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quatinterp/errors.hpp"
#include "quatinterp/skew_linalg.hpp"

namespace quatinterp {

namespace {

constexpr std::size_t kMaxFactors = 6;

bool coord_less(const Quaternion& a, const Quaternion& b) {
    return a.coords() < b.coords();
}

// Indices of pts in ascending coordinate order. Working through a canonical
// order makes every symmetrized construction bitwise independent of the
// input ordering.
std::vector<std::size_t> canonical_order(const std::vector<Quaternion>& pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return coord_less(pts[a], pts[b]); });
    return idx;
}

TxyzPoly linear_factor(const Quaternion& a) {
    return TxyzPoly::variable() - TxyzPoly::constant(a);
}

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t m = 2; m <= n; ++m) f *= static_cast<double>(m);
    return f;
}

} // namespace

TxyzPoly sym_annihilator(std::span<const Quaternion> points) {
    const std::size_t n = points.size();
    if (n > kMaxFactors) {
        std::ostringstream msg;
        msg << "symmetrized products are limited to " << kMaxFactors << " points, got " << n;
        throw MathError(ErrorReason::DegreeLimit, msg.str());
    }
    if (n == 0) return TxyzPoly::one();

    std::vector<Quaternion> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), coord_less);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TxyzPoly sum;
    do {
        TxyzPoly prod = TxyzPoly::one();
        for (std::size_t m : perm) prod = txyz_mul(prod, linear_factor(sorted[m]));
        sum = sum + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return scale(sum, 1.0 / factorial(n));
}

namespace {

TxyzPoly lagrange_poly_for(const PointSet& pts, std::size_t j, LagrangeChoice choice) {
    const std::vector<Quaternion>& p = pts.points();
    std::vector<Quaternion> others;
    others.reserve(p.size() - 1);
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (m != j) others.push_back(p[m]);
    }
    std::sort(others.begin(), others.end(), coord_less);

    if (choice == LagrangeChoice::QuotientNormalized) {
        const TxyzPoly ann = sym_annihilator(others);
        const Quaternion at_node = txyz_eval(ann, p[j]);
        const double scale = std::max(1.0, ann.max_coeff_norm());
        if (abs(at_node) <= pts.tolerance().eps * scale) {
            std::ostringstream msg;
            msg << "symmetrized annihilator vanishes at node " << j << " (value "
                << at_node << "); the quotient-normalized basis does not exist";
            throw MathError(ErrorReason::DegenerateConfiguration, msg.str());
        }
        return scale_right(ann, inverse(at_node));
    }

    // Symmetrized factors: average over all orderings of the others, each
    // factor normalized by its own value at the node, multiplied left to
    // right in that order.
    TxyzPoly sum;
    std::vector<std::size_t> perm(others.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TxyzPoly term = TxyzPoly::one();
        for (std::size_t m : perm) {
            term = txyz_mul(term, linear_factor(others[m]));
            term = scale_right(term, inverse(p[j] - others[m]));
        }
        sum = sum + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return scale(sum, 1.0 / factorial(others.size()));
}

} // namespace

LagrangeBasis lagrange_basis(const PointSet& pts, LagrangeChoice choice) {
    if (pts.size() == 0) {
        throw MathError(ErrorReason::InvalidPointSet, "at least one point required");
    }
    if (pts.size() - 1 > kMaxFactors) {
        std::ostringstream msg;
        msg << "bases are limited to " << kMaxFactors + 1 << " points, got " << pts.size();
        throw MathError(ErrorReason::DegreeLimit, msg.str());
    }
    LagrangeBasis basis{pts.points(), choice, {}};
    basis.polys.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        basis.polys.push_back(lagrange_poly_for(pts, j, choice));
    }
    return basis;
}

double partition_of_unity_defect(const std::vector<TxyzPoly>& polys) {
    TxyzPoly sum;
    for (const TxyzPoly& p : polys) sum = sum + p;
    return (sum - TxyzPoly::one()).max_coeff_norm();
}

TxyzPoly interpolate_sym(const PointSet& pts, const std::vector<Quaternion>& values,
                         LagrangeChoice choice) {
    if (values.size() != pts.size()) {
        throw std::invalid_argument("one value per interpolation point required");
    }
    const LagrangeBasis basis = lagrange_basis(pts, choice);
    TxyzPoly acc;
    for (std::size_t j : canonical_order(pts.points())) {
        acc = acc + scale_right(basis.polys[j], values[j]);
    }
    return acc;
}

TxyzPoly real_interpolate(const PointSet& pts, const std::vector<double>& values,
                          LagrangeChoice choice) {
    if (values.size() != pts.size()) {
        throw std::invalid_argument("one value per interpolation point required");
    }
    const LagrangeBasis basis = lagrange_basis(pts, choice);
    TxyzPoly acc;
    for (std::size_t j : canonical_order(pts.points())) {
        acc = acc + scale(real_part(basis.polys[j]), values[j]);
    }
    return acc;
}

std::pair<TxyzPoly, Quaternion> newton_step_sym(const TxyzPoly& prev,
                                                const PointSet& prev_pts,
                                                const Quaternion& new_pt,
                                                const Quaternion& new_val,
                                                NewtonPivot pivot) {
    TxyzPoly update;
    if (pivot == NewtonPivot::Annihilator) {
        const TxyzPoly ann = sym_annihilator(prev_pts.points());
        const Quaternion at_new = txyz_eval(ann, new_pt);
        const double scale = std::max(1.0, ann.max_coeff_norm());
        if (abs(at_new) <= prev_pts.tolerance().eps * scale) {
            throw MathError(ErrorReason::DegenerateConfiguration,
                            "annihilator of the previous points vanishes at the new point");
        }
        update = scale_right(ann, inverse(at_new));
    } else {
        std::vector<Quaternion> all = prev_pts.points();
        all.push_back(new_pt);
        const PointSet extended(all, prev_pts.tolerance());
        update = lagrange_poly_for(extended, all.size() - 1, LagrangeChoice::SymmetrizedFactors);
    }
    const Quaternion d = new_val - txyz_eval(prev, new_pt);
    return {prev + scale_right(update, d), d};
}

TxyzPoly barycentric_linear(std::span<const Quaternion> pts5,
                            std::span<const Quaternion> values5, Tolerance tol) {
    if (pts5.size() != 5 || values5.size() != 5) {
        throw std::invalid_argument("exactly five points and five values required");
    }
    // Row j: p(x_j) = p_0 + x_j p_1 + (i x_j) p_2 + (j x_j) p_3 + (k x_j) p_4.
    QuatMatrix A(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
        A(r, 0) = Quaternion::one();
        A(r, 1) = pts5[r];
        A(r, 2) = Quaternion::i() * pts5[r];
        A(r, 3) = Quaternion::j() * pts5[r];
        A(r, 4) = Quaternion::k() * pts5[r];
    }
    QuatColumn rhs(values5.begin(), values5.end());
    QuatColumn u;
    try {
        u = gauss_solve(A, rhs, tol);
    } catch (const MathError& e) {
        if (e.reason() == ErrorReason::SingularSystem) {
            throw MathError(ErrorReason::SingularSystem,
                            "points are affinely dependent in R^4");
        }
        throw;
    }
    const TxyzPoly q = TxyzPoly::variable();
    TxyzPoly out = TxyzPoly::constant(u[0]);
    out = out + scale_right(q, u[1]);
    out = out + scale_right(scale_left(Quaternion::i(), q), u[2]);
    out = out + scale_right(scale_left(Quaternion::j(), q), u[3]);
    out = out + scale_right(scale_left(Quaternion::k(), q), u[4]);
    return out;
}

std::pair<std::complex<double>, std::complex<double>> cayley_dickson(const Quaternion& q) {
    const std::complex<double> v(q.t, q.x);
    const std::complex<double> w(q.y, -q.z);

    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const Quaternion v_id = (q - i * q * i) * 0.5;
    const Quaternion w_id = (-(j * q) + k * q * i) * 0.5;
    const double scale = std::max(1.0, abs(q));
    if (std::fabs(v_id.t - v.real()) > 1e-12 * scale ||
        std::fabs(v_id.x - v.imag()) > 1e-12 * scale ||
        std::fabs(w_id.t - w.real()) > 1e-12 * scale ||
        std::fabs(w_id.x - w.imag()) > 1e-12 * scale) {
        throw std::logic_error("Cayley-Dickson identities disagree with coordinates");
    }
    return {v, w};
}

} // namespace quatinterp
