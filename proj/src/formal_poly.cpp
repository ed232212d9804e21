#include "quatinterp/formal_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quatinterp/errors.hpp"

namespace quatinterp {

FormalPoly operator+(const FormalPoly& f, const FormalPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.coeff(j) + g.coeff(j);
    return FormalPoly(std::move(c));
}

FormalPoly operator-(const FormalPoly& f, const FormalPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.coeff(j) - g.coeff(j);
    return FormalPoly(std::move(c));
}

FormalPoly star_mul(const FormalPoly& f, const FormalPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Quaternion> c(f.coeffs().size() + g.coeffs().size() - 1,
                              Quaternion::zero());
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
            c[j + k] += f.coeffs()[j] * g.coeffs()[k];
        }
    }
    return FormalPoly(std::move(c));
}

FormalPoly scale_right(const FormalPoly& f, const Quaternion& c) {
    return star_mul(f, FormalPoly::constant(c));
}

FormalPoly scale_left(const Quaternion& c, const FormalPoly& f) {
    return star_mul(FormalPoly::constant(c), f);
}

Quaternion eval_left(const FormalPoly& f, const Quaternion& a) {
    // Horner from the top: a*(...) keeps all powers of a on the left.
    Quaternion acc = Quaternion::zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = a * acc + *it;
    }
    return acc;
}

Quaternion eval_right(const FormalPoly& f, const Quaternion& a) {
    Quaternion acc = Quaternion::zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * a + *it;
    }
    return acc;
}

std::pair<FormalPoly, Quaternion> left_div_linear(const FormalPoly& f, const Quaternion& a) {
    const int n = f.degree();
    if (n < 1) {
        throw MathError(ErrorReason::PreconditionViolation,
                        "left_div_linear requires degree >= 1");
    }
    // Matching f = (z-a)*g + r coefficientwise: f_n = g_{n-1},
    // f_j = g_{j-1} - a g_j, f_0 = -a g_0 + r (synthetic division).
    std::vector<Quaternion> g(static_cast<std::size_t>(n), Quaternion::zero());
    g[static_cast<std::size_t>(n - 1)] = f.coeffs().back();
    for (int j = n - 1; j >= 1; --j) {
        g[static_cast<std::size_t>(j - 1)] =
            f.coeffs()[static_cast<std::size_t>(j)] + a * g[static_cast<std::size_t>(j)];
    }
    const Quaternion r = f.coeffs()[0] + a * g[0];
    return {FormalPoly(std::move(g)), r};
}

FormalPoly annihilator_hz(const PointSet& points) {
    if (points.max_class_size() > 2) {
        throw MathError(ErrorReason::NotUnisolvent,
                        "three mutually similar points admit no unisolvent annihilator");
    }
    FormalPoly p = FormalPoly::one();
    for (const Quaternion& a : points.points()) {
        const Quaternion c = eval_left(p, a);
        // Scale of the evaluation: sum over |a|^j |p_j| bounds |c|.
        double scale = 0.0;
        double apow = 1.0;
        const double amag = abs(a);
        for (const Quaternion& pj : p.coeffs()) {
            scale += apow * abs(pj);
            apow *= amag;
        }
        Quaternion root = a;
        if (abs(c) > points.tolerance().eps * std::max(1.0, scale)) {
            // (p * (z - r))^{e_l}(a) = c * ((c^{-1} a c) - r), so the factor
            // root must be the conjugate c^{-1} a c.
            root = inverse(c) * a * c;
        }
        p = star_mul(p, FormalPoly::linear_factor(root));
    }
    return p;
}

} // namespace quatinterp
