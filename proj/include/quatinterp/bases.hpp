#pragma once

#include <vector>

#include "quatinterp/skew_linalg.hpp"
#include "quatinterp/txyz_poly.hpp"

namespace quatinterp {

enum class SpaceKind { Hom, Pol, Reg, Harm };

/// Dimensions over H of the homogeneous degree-n, degree-<=n, regular and
/// harmonic homogeneous polynomial spaces:
/// C(n+3,3), C(n+4,4), (n+1)(n+2)/2 and (n+1)^2.
long dims(SpaceKind kind, int n);

/// All degree-n exponent tuples in lexicographic order.
std::vector<Exponent> hom_exponents(int n);

/// Monomial basis of Hom_n (coefficient-1 real monomials).
std::vector<TxyzPoly> hom_monomials(int n);

/// Monomial basis of Pol_n (degrees 0..n).
std::vector<TxyzPoly> pol_monomials(int n);

enum class SudberyForm {
    Corrected, ///< w and w-bar exponents interchanged; every element regular.
    Raw        ///< formula as printed; Raw degree-1 element w-bar is not regular.
};

/// Divided-power basis {P^n_{kl} - j P^n_{k-1,l} : 0 <= k <= l <= n} of the
/// regular homogeneous polynomials of degree n, built from v = t+ix and
/// w = y-iz with z^[m] = z^m/m!.
std::vector<TxyzPoly> sudbery_basis(int n, SudberyForm form = SudberyForm::Corrected);

/// One symmetrized product per composition n1+n2+n3 = n of the linear regular
/// polynomials it-x, jt-y, kt-z: the average over all distinct orderings of
/// the factor multiset.
std::vector<TxyzPoly> symmetrized_regular_basis(int n);

/// Dimension of the right H-span of the given polynomials: pivot count of the
/// coefficient matrix with one column per polynomial and one row per monomial.
std::size_t span_rank(const std::vector<TxyzPoly>& ps, Tolerance tol = {});

} // namespace quatinterp
