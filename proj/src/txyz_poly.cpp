#include "quatinterp/txyz_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatinterp/errors.hpp"

namespace quatinterp {

TxyzPoly TxyzPoly::variable() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, Quaternion::one());
    p.add_term({0, 1, 0, 0}, Quaternion::i());
    p.add_term({0, 0, 1, 0}, Quaternion::j());
    p.add_term({0, 0, 0, 1}, Quaternion::k());
    return p;
}

int TxyzPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

bool TxyzPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int td = e[0] + e[1] + e[2] + e[3];
        if (d < 0) d = td;
        if (td != d) return false;
    }
    return true;
}

double TxyzPoly::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, abs(c));
    return m;
}

TxyzPoly operator+(const TxyzPoly& p, const TxyzPoly& r) {
    TxyzPoly out = p;
    for (const auto& [e, c] : r.terms()) out.add_term(e, c);
    return out;
}

TxyzPoly operator-(const TxyzPoly& p, const TxyzPoly& r) {
    TxyzPoly out = p;
    for (const auto& [e, c] : r.terms()) out.add_term(e, -c);
    return out;
}

TxyzPoly operator-(const TxyzPoly& p) {
    TxyzPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, -c);
    return out;
}

TxyzPoly txyz_mul(const TxyzPoly& p, const TxyzPoly& r) {
    TxyzPoly out;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [er, cr] : r.terms()) {
            const Exponent e = {ep[0] + er[0], ep[1] + er[1], ep[2] + er[2], ep[3] + er[3]};
            out.add_term(e, cp * cr);
        }
    }
    return out;
}

TxyzPoly scale_right(const TxyzPoly& p, const Quaternion& c) {
    TxyzPoly out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, pc * c);
    return out;
}

TxyzPoly scale_left(const Quaternion& c, const TxyzPoly& p) {
    TxyzPoly out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
    return out;
}

TxyzPoly scale(const TxyzPoly& p, double s) {
    TxyzPoly out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, pc * s);
    return out;
}

Quaternion txyz_eval(const TxyzPoly& p, const Quaternion& a) {
    Quaternion acc = Quaternion::zero();
    for (const auto& [e, c] : p.terms()) {
        double m = 1.0;
        for (int n = 0; n < e[0]; ++n) m *= a.t;
        for (int n = 0; n < e[1]; ++n) m *= a.x;
        for (int n = 0; n < e[2]; ++n) m *= a.y;
        for (int n = 0; n < e[3]; ++n) m *= a.z;
        acc += c * m;
    }
    return acc;
}

TxyzPoly real_part(const TxyzPoly& p) {
    TxyzPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, Quaternion::real(re(c)));
    return out;
}

TxyzPoly expand_word(const QuatWord& w) {
    if (w.letters.empty()) {
        throw std::invalid_argument("a quaternionic monomial needs at least one letter");
    }
    TxyzPoly acc = TxyzPoly::constant(w.letters.front());
    const TxyzPoly q = TxyzPoly::variable();
    for (std::size_t m = 1; m < w.letters.size(); ++m) {
        acc = txyz_mul(acc, q);
        acc = scale_right(acc, w.letters[m]);
    }
    return acc;
}

TxyzPoly formal_to_txyz(const FormalPoly& f) {
    TxyzPoly acc;
    TxyzPoly qpow = TxyzPoly::one();
    const TxyzPoly q = TxyzPoly::variable();
    for (const Quaternion& c : f.coeffs()) {
        acc = acc + scale_right(qpow, c);
        qpow = txyz_mul(qpow, q);
    }
    return acc;
}

namespace {

TxyzPoly partial(const TxyzPoly& p, int var) {
    TxyzPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponent d = e;
        d[var] -= 1;
        out.add_term(d, c * static_cast<double>(e[var]));
    }
    return out;
}

} // namespace

TxyzPoly cauchy_feuter(const TxyzPoly& p) {
    TxyzPoly out = partial(p, 0);
    out = out + scale_left(Quaternion::i(), partial(p, 1));
    out = out + scale_left(Quaternion::j(), partial(p, 2));
    out = out + scale_left(Quaternion::k(), partial(p, 3));
    return out;
}

TxyzPoly laplacian(const TxyzPoly& p) {
    TxyzPoly out;
    for (int var = 0; var < 4; ++var) out = out + partial(partial(p, var), var);
    return out;
}

Classification classify(const TxyzPoly& p, Tolerance tol) {
    const double scale = std::max(1.0, p.max_coeff_norm());
    Classification c;
    c.regular = cauchy_feuter(p).max_coeff_norm() < tol.eps * scale;
    c.harmonic = laplacian(p).max_coeff_norm() < tol.eps * scale;
    if (c.regular && !c.harmonic) {
        throw std::logic_error("regular polynomial classified as non-harmonic");
    }
    return c;
}

} // namespace quatinterp
