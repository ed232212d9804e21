#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "quatinterp/errors.hpp"

namespace quatinterp {

/// A quaternion t + x*i + y*j + z*k with double coordinates and the Hamilton
/// relations i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double t_, double x_, double y_, double z_)
        : t(t_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {0, 0, 0, 0}; }
    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }
    static constexpr Quaternion real(double v) { return {v, 0, 0, 0}; }

    constexpr std::array<double, 4> coords() const { return {t, x, y, z}; }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.t, -a.x, -a.y, -a.z};
}

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
            a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
            a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
            a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
}

constexpr Quaternion operator*(const Quaternion& a, double s) {
    return {a.t * s, a.x * s, a.y * s, a.z * s};
}

constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }

constexpr Quaternion& operator+=(Quaternion& a, const Quaternion& b) { return a = a + b; }
constexpr Quaternion& operator-=(Quaternion& a, const Quaternion& b) { return a = a - b; }
constexpr Quaternion& operator*=(Quaternion& a, const Quaternion& b) { return a = a * b; }

constexpr double re(const Quaternion& a) { return a.t; }

constexpr Quaternion conj(const Quaternion& a) { return {a.t, -a.x, -a.y, -a.z}; }

constexpr double norm_sq(const Quaternion& a) {
    return a.t * a.t + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline double abs(const Quaternion& a) { return std::sqrt(norm_sq(a)); }

inline bool is_zero(const Quaternion& a) { return norm_sq(a) == 0.0; }

inline Quaternion inverse(const Quaternion& a) {
    const double n2 = norm_sq(a);
    if (n2 == 0.0) {
        throw MathError(ErrorReason::DivisionByZero, "inverse of zero quaternion");
    }
    return conj(a) * (1.0 / n2);
}

inline Quaternion pow(const Quaternion& a, int n) {
    if (n < 0) return pow(inverse(a), -n);
    Quaternion r = Quaternion::one();
    for (int m = 0; m < n; ++m) r = r * a;
    return r;
}

/// Relative comparison threshold used throughout; eps must be positive.
struct Tolerance {
    double eps = 1e-9;
};

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol_abs) {
    return abs(a - b) <= tol_abs;
}

/// Similarity test: q2 = a q1 a^{-1} for some a != 0, equivalently equal real
/// parts and equal moduli. Relative tolerance with an absolute floor of eps.
inline bool similar(const Quaternion& a, const Quaternion& b, Tolerance tol = {}) {
    const double scale = std::max({1.0, abs(a), abs(b)});
    return std::fabs(re(a) - re(b)) <= tol.eps * scale &&
           std::fabs(abs(a) - abs(b)) <= tol.eps * scale;
}

/// Recovers the four real coordinates of q through the quarter-sum identities
/// t = (q - iqi - jqj - kqk)/4,  x = (4i)^{-1}(q - iqi + jqj + kqk),  etc.
/// Returns (t, x, y, z); agreement with the stored fields is an identity check.
inline std::array<double, 4> coord_extract(const Quaternion& q) {
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const Quaternion iqi = i * q * i;
    const Quaternion jqj = j * q * j;
    const Quaternion kqk = k * q * k;

    const Quaternion st = (q - iqi - jqj - kqk) * 0.25;
    const Quaternion sx = inverse(i * 4.0) * (q - iqi + jqj + kqk);
    const Quaternion sy = inverse(j * 4.0) * (q + iqi - jqj + kqk);
    const Quaternion sz = inverse(k * 4.0) * (q + iqi + jqj - kqk);
    return {st.t, sx.t, sy.t, sz.t};
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.t << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

} // namespace quatinterp
