#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quatinterp/point_set.hpp"
#include "quatinterp/quaternion.hpp"

namespace quatinterp {

/// Formal polynomial f(z) = z^n f_n + ... + z f_1 + f_0 with quaternion
/// coefficients and a formally central variable z. Coefficients are stored
/// ascending by degree; the zero polynomial stores nothing.
class FormalPoly {
public:
    FormalPoly() = default;
    explicit FormalPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static FormalPoly constant(const Quaternion& c) { return FormalPoly({c}); }
    static FormalPoly one() { return constant(Quaternion::one()); }
    /// The monic linear factor z - a.
    static FormalPoly linear_factor(const Quaternion& a) {
        return FormalPoly({-a, Quaternion::one()});
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    Quaternion coeff(std::size_t j) const {
        return j < coeffs_.size() ? coeffs_[j] : Quaternion::zero();
    }
    Quaternion leading() const {
        return coeffs_.empty() ? Quaternion::zero() : coeffs_.back();
    }

    bool operator==(const FormalPoly&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && quatinterp::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Quaternion> coeffs_;
};

FormalPoly operator+(const FormalPoly& f, const FormalPoly& g);
FormalPoly operator-(const FormalPoly& f, const FormalPoly& g);

/// Star product on H[z]: (sum z^j a_j) * (sum z^k b_k) = sum z^{j+k} a_j b_k.
/// This is coefficient convolution, not pointwise multiplication.
FormalPoly star_mul(const FormalPoly& f, const FormalPoly& g);

/// Coefficients multiplied by c on the right: f * c as a star product.
FormalPoly scale_right(const FormalPoly& f, const Quaternion& c);
/// Coefficients multiplied by c on the left: c * f as a star product.
FormalPoly scale_left(const Quaternion& c, const FormalPoly& f);

/// Left evaluation f^{e_l}(a) = sum_j a^j f_j. H-linear in f over the right
/// module: eval_left(f*alpha + g*beta, a) = eval_left(f,a)*alpha + eval_left(g,a)*beta.
Quaternion eval_left(const FormalPoly& f, const Quaternion& a);

/// Right evaluation f^{e_r}(a) = sum_j f_j a^j. Not linear over the right
/// module (eval_right(scale_right(f, c), a) != eval_right(f, a) * c in general).
Quaternion eval_right(const FormalPoly& f, const Quaternion& a);

/// Division by the monic linear factor z - a from the left:
/// f = (z - a) * g + r with constant remainder r. The remainder equals the
/// left evaluation f^{e_l}(a). Requires deg f >= 1.
std::pair<FormalPoly, Quaternion> left_div_linear(const FormalPoly& f, const Quaternion& a);

/// Monic polynomial of degree |points| whose left evaluation vanishes at
/// every point. Built by skew root adjunction: p <- p * (z - c^{-1} a c) with
/// c = eval_left(p, a), which kills a while preserving existing left roots.
/// Throws not-unisolvent if three of the points are mutually similar.
FormalPoly annihilator_hz(const PointSet& points);

} // namespace quatinterp
