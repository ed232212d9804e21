#include "quatinterp/bases.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quatinterp {

long dims(SpaceKind kind, int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    const long m = n;
    switch (kind) {
    case SpaceKind::Hom: return (m + 1) * (m + 2) * (m + 3) / 6;
    case SpaceKind::Pol: return (m + 1) * (m + 2) * (m + 3) * (m + 4) / 24;
    case SpaceKind::Reg: return (m + 1) * (m + 2) / 2;
    case SpaceKind::Harm: return (m + 1) * (m + 1);
    }
    throw std::invalid_argument("unknown space kind");
}

std::vector<Exponent> hom_exponents(int n) {
    std::vector<Exponent> out;
    for (int a = n; a >= 0; --a) {
        for (int b = n - a; b >= 0; --b) {
            for (int c = n - a - b; c >= 0; --c) {
                out.push_back({a, b, c, n - a - b - c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TxyzPoly> hom_monomials(int n) {
    std::vector<TxyzPoly> out;
    for (const Exponent& e : hom_exponents(n)) out.push_back(TxyzPoly::monomial(e));
    return out;
}

std::vector<TxyzPoly> pol_monomials(int n) {
    std::vector<TxyzPoly> out;
    for (int d = 0; d <= n; ++d) {
        for (const Exponent& e : hom_exponents(d)) out.push_back(TxyzPoly::monomial(e));
    }
    return out;
}

namespace {

// Complex coordinates of the Cayley-Dickson split q = v + jw, as polynomials.
TxyzPoly cd_v() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, Quaternion::one());
    p.add_term({0, 1, 0, 0}, Quaternion::i());
    return p;
}

TxyzPoly cd_v_bar() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, Quaternion::one());
    p.add_term({0, 1, 0, 0}, -Quaternion::i());
    return p;
}

TxyzPoly cd_w() {
    TxyzPoly p;
    p.add_term({0, 0, 1, 0}, Quaternion::one());
    p.add_term({0, 0, 0, 1}, -Quaternion::i());
    return p;
}

TxyzPoly cd_w_bar() {
    TxyzPoly p;
    p.add_term({0, 0, 1, 0}, Quaternion::one());
    p.add_term({0, 0, 0, 1}, Quaternion::i());
    return p;
}

// Divided power base^[m] = base^m / m!; zero for negative m.
TxyzPoly divided_power(const TxyzPoly& base, int m) {
    if (m < 0) return {};
    TxyzPoly acc = TxyzPoly::one();
    double fact = 1.0;
    for (int r = 1; r <= m; ++r) {
        acc = txyz_mul(acc, base);
        fact *= r;
    }
    return scale(acc, 1.0 / fact);
}

// P^n_{kl} = sum_r (-1)^r v^[n-k-l+r] vbar^[r] w^[?] wbar^[?]; the corrected
// form carries w^[l-r] wbar^[k-r], the raw (printed) form w^[k-r] wbar^[l-r].
TxyzPoly sudbery_p(int n, int k, int l, SudberyForm form) {
    const TxyzPoly v = cd_v(), vb = cd_v_bar(), w = cd_w(), wb = cd_w_bar();
    TxyzPoly acc;
    for (int r = 0; r <= n; ++r) {
        const int ev = n - k - l + r;
        const int ew = form == SudberyForm::Corrected ? l - r : k - r;
        const int ewb = form == SudberyForm::Corrected ? k - r : l - r;
        if (ev < 0 || ew < 0 || ewb < 0) continue;
        TxyzPoly term = txyz_mul(divided_power(v, ev), divided_power(vb, r));
        term = txyz_mul(term, divided_power(w, ew));
        term = txyz_mul(term, divided_power(wb, ewb));
        if (r % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

} // namespace

std::vector<TxyzPoly> sudbery_basis(int n, SudberyForm form) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<TxyzPoly> out;
    for (int l = 0; l <= n; ++l) {
        for (int k = 0; k <= l; ++k) {
            const TxyzPoly p = sudbery_p(n, k, l, form);
            const TxyzPoly q = sudbery_p(n, k - 1, l, form);
            out.push_back(p - scale_left(Quaternion::j(), q));
        }
    }
    return out;
}

std::vector<TxyzPoly> symmetrized_regular_basis(int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    // Linear regular factors it - x, jt - y, kt - z.
    TxyzPoly lin[3];
    lin[0].add_term({1, 0, 0, 0}, Quaternion::i());
    lin[0].add_term({0, 1, 0, 0}, -Quaternion::one());
    lin[1].add_term({1, 0, 0, 0}, Quaternion::j());
    lin[1].add_term({0, 0, 1, 0}, -Quaternion::one());
    lin[2].add_term({1, 0, 0, 0}, Quaternion::k());
    lin[2].add_term({0, 0, 0, 1}, -Quaternion::one());

    std::vector<TxyzPoly> out;
    for (int n1 = n; n1 >= 0; --n1) {
        for (int n2 = n - n1; n2 >= 0; --n2) {
            const int n3 = n - n1 - n2;
            std::vector<int> word;
            word.insert(word.end(), n1, 0);
            word.insert(word.end(), n2, 1);
            word.insert(word.end(), n3, 2);
            TxyzPoly sum;
            std::size_t count = 0;
            do {
                TxyzPoly prod = TxyzPoly::one();
                for (int f : word) prod = txyz_mul(prod, lin[f]);
                sum = sum + prod;
                ++count;
            } while (std::next_permutation(word.begin(), word.end()));
            out.push_back(scale(sum, 1.0 / static_cast<double>(count)));
        }
    }
    return out;
}

std::size_t span_rank(const std::vector<TxyzPoly>& ps, Tolerance tol) {
    if (ps.empty()) return 0;
    std::map<Exponent, std::size_t> row_of;
    for (const TxyzPoly& p : ps) {
        for (const auto& [e, c] : p.terms()) row_of.emplace(e, 0);
    }
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;

    // Right dependencies sum_i p_i c_i = 0 are right combinations of columns,
    // which left-acting elimination detects.
    QuatMatrix M(row_of.size(), ps.size());
    for (std::size_t col = 0; col < ps.size(); ++col) {
        for (const auto& [e, c] : ps[col].terms()) M(row_of[e], col) = c;
    }
    return rank(M, tol);
}

} // namespace quatinterp
