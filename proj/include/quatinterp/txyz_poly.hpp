#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "quatinterp/formal_poly.hpp"
#include "quatinterp/quaternion.hpp"

namespace quatinterp {

/// Exponent tuple (a,b,c,d) of the real monomial t^a x^b y^c z^d.
using Exponent = std::array<int, 4>;

/// Polynomial in the commuting real coordinates t,x,y,z of q = t+ix+jy+kz,
/// with quaternion coefficients. Stored sparse; zero coefficients are never
/// kept, so the zero polynomial has no terms.
class TxyzPoly {
public:
    using TermMap = std::map<Exponent, Quaternion>;

    TxyzPoly() = default;

    static TxyzPoly constant(const Quaternion& c) {
        TxyzPoly p;
        p.add_term({0, 0, 0, 0}, c);
        return p;
    }
    static TxyzPoly one() { return constant(Quaternion::one()); }
    /// The identity function q -> q, i.e. t*1 + x*i + y*j + z*k.
    static TxyzPoly variable();
    /// Coordinate monomial with coefficient 1.
    static TxyzPoly monomial(const Exponent& e, const Quaternion& c = Quaternion::one()) {
        TxyzPoly p;
        p.add_term(e, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True when all stored terms have the same total degree.
    bool is_homogeneous() const;
    double max_coeff_norm() const;

    void add_term(const Exponent& e, const Quaternion& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!quatinterp::is_zero(c)) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (quatinterp::is_zero(it->second)) terms_.erase(it);
    }

    bool operator==(const TxyzPoly&) const = default;

private:
    TermMap terms_;
};

TxyzPoly operator+(const TxyzPoly& p, const TxyzPoly& r);
TxyzPoly operator-(const TxyzPoly& p, const TxyzPoly& r);
TxyzPoly operator-(const TxyzPoly& p);

/// Pointwise product: quaternion coefficients multiply in operand order,
/// exponents add. The real monomials commute with everything, so evaluation
/// is multiplicative: (p*r)(q) = p(q) * r(q).
TxyzPoly txyz_mul(const TxyzPoly& p, const TxyzPoly& r);

/// Coefficients multiplied by c on the right (right-module scaling).
TxyzPoly scale_right(const TxyzPoly& p, const Quaternion& c);
/// Coefficients multiplied by c on the left.
TxyzPoly scale_left(const Quaternion& c, const TxyzPoly& p);
TxyzPoly scale(const TxyzPoly& p, double s);

Quaternion txyz_eval(const TxyzPoly& p, const Quaternion& a);

/// Real-part polynomial: every coefficient replaced by its scalar part.
TxyzPoly real_part(const TxyzPoly& p);

/// Quaternionic monomial word q -> a_0 q a_1 q ... q a_r of degree r =
/// letters.size() - 1. At least one letter is required.
struct QuatWord {
    std::vector<Quaternion> letters;
};

/// Substitutes q = t + ix + jy + kz into the word and expands; the result is
/// homogeneous of the word's degree.
TxyzPoly expand_word(const QuatWord& w);

/// A formal polynomial viewed as the function q -> sum q^j f_j.
TxyzPoly formal_to_txyz(const FormalPoly& f);

/// Doubled Cauchy-Feuter operator 2*d_l = d/dt + i d/dx + j d/dy + k d/dz,
/// the units acting on coefficients from the left.
TxyzPoly cauchy_feuter(const TxyzPoly& p);

/// Four-variable Laplacian.
TxyzPoly laplacian(const TxyzPoly& p);

struct Classification {
    bool regular = false;
    bool harmonic = false;
};

/// Regular iff 2*d_l p vanishes (coefficients below tol.eps relative to the
/// polynomial's own scale); harmonic iff the Laplacian does.
Classification classify(const TxyzPoly& p, Tolerance tol = {});

} // namespace quatinterp
