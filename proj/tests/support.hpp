#pragma once

#include <random>
#include <vector>

#include "quatinterp/formal_poly.hpp"
#include "quatinterp/quaternion.hpp"

namespace quatinterp::testing {

inline Quaternion random_quat(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

inline Quaternion random_unit(std::mt19937_64& rng) {
    Quaternion q;
    do {
        q = random_quat(rng);
    } while (abs(q) < 0.1);
    return q * (1.0 / abs(q));
}

inline FormalPoly random_formal(std::mt19937_64& rng, int degree) {
    std::vector<Quaternion> c;
    for (int m = 0; m <= degree; ++m) c.push_back(random_quat(rng));
    return FormalPoly(std::move(c));
}

/// Conjugate b = s a s^{-1}; similar to a by construction.
inline Quaternion conjugate_by(const Quaternion& a, const Quaternion& s) {
    return s * a * inverse(s);
}

} // namespace quatinterp::testing
