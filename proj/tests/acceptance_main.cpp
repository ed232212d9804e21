// Acceptance suite: reproduces the worked examples and property suites that
// define correct behavior, one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quatinterp/bases.hpp"
#include "quatinterp/hz_interp.hpp"
#include "quatinterp/json_io.hpp"
#include "quatinterp/sym_interp.hpp"

using namespace quatinterp;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

struct Checker {
    int failures = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
    void require_close(double actual, double bound, const std::string& what) {
        if (!(actual < bound)) {
            ++failures;
            std::ostringstream os;
            os << what << " (got " << actual << ", bound " << bound << ")";
            notes.push_back(os.str());
        }
    }
};

Quaternion random_quat(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

Quaternion random_unit(std::mt19937_64& rng) {
    Quaternion q;
    do {
        q = random_quat(rng, -1.0, 1.0);
    } while (abs(q) < 0.1);
    return q * (1.0 / abs(q));
}

FormalPoly random_formal(std::mt19937_64& rng, int degree) {
    std::vector<Quaternion> c;
    for (int m = 0; m <= degree; ++m) c.push_back(random_quat(rng, -1.0, 1.0));
    return FormalPoly(std::move(c));
}

// Unisolvent sets with a quantitative margin: pairwise separated and no
// triple whose real parts and moduli all agree within the margin.
std::vector<Quaternion> random_unisolvent(std::mt19937_64& rng, std::size_t count,
                                          double margin = 0.05) {
    while (true) {
        std::vector<Quaternion> pts;
        for (std::size_t m = 0; m < count; ++m) pts.push_back(random_quat(rng));
        bool ok = true;
        for (std::size_t a = 0; a < count && ok; ++a) {
            for (std::size_t b = a + 1; b < count && ok; ++b) {
                if (abs(pts[a] - pts[b]) < margin) ok = false;
                for (std::size_t c = b + 1; c < count && ok; ++c) {
                    double remin = re(pts[a]), remax = re(pts[a]);
                    double mmin = abs(pts[a]), mmax = abs(pts[a]);
                    for (std::size_t d : {b, c}) {
                        remin = std::min(remin, re(pts[d]));
                        remax = std::max(remax, re(pts[d]));
                        mmin = std::min(mmin, abs(pts[d]));
                        mmax = std::max(mmax, abs(pts[d]));
                    }
                    if (remax - remin < margin && mmax - mmin < margin) ok = false;
                }
            }
        }
        if (ok) return pts;
    }
}

std::vector<Quaternion> separated_points(std::mt19937_64& rng, std::size_t count,
                                         double min_sep = 0.5) {
    while (true) {
        std::vector<Quaternion> pts;
        for (std::size_t m = 0; m < count; ++m) pts.push_back(random_quat(rng));
        bool ok = true;
        for (std::size_t a = 0; a < count && ok; ++a) {
            for (std::size_t b = a + 1; b < count && ok; ++b) {
                if (abs(pts[a] - pts[b]) < min_sep) ok = false;
            }
        }
        if (ok) return pts;
    }
}

TxyzPoly t_plus_ix() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, Quaternion::one());
    p.add_term({0, 1, 0, 0}, I);
    return p;
}

TxyzPoly t_plus_jy() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, Quaternion::one());
    p.add_term({0, 0, 1, 0}, J);
    return p;
}

TxyzPoly it_minus_x() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, I);
    p.add_term({0, 1, 0, 0}, -Quaternion::one());
    return p;
}

TxyzPoly jt_minus_y() {
    TxyzPoly p;
    p.add_term({1, 0, 0, 0}, J);
    p.add_term({0, 0, 1, 0}, -Quaternion::one());
    return p;
}

void criterion_paper_examples(Checker& c) {
    const double tol = 1e-10;

    // (z-i)*(z+i) = z^2 + 1.
    const FormalPoly prod =
        star_mul(FormalPoly::linear_factor(I), FormalPoly({I, Quaternion::one()}));
    const FormalPoly z2p1({Quaternion::one(), Quaternion::zero(), Quaternion::one()});
    double d = 0.0;
    for (std::size_t m = 0; m <= 2; ++m) d = std::max(d, abs(prod.coeff(m) - z2p1.coeff(m)));
    c.require_close(d, tol, "(z-i)*(z+i) = z^2+1");

    // Left root i and right root j of (z-i)*(z-j).
    const FormalPoly mixed =
        star_mul(FormalPoly::linear_factor(I), FormalPoly::linear_factor(J));
    c.require_close(abs(eval_left(mixed, I)), tol, "eval_left((z-i)*(z-j), i) = 0");
    c.require_close(abs(eval_right(mixed, J)), tol, "eval_right((z-i)*(z-j), j) = 0");
    c.require_close(abs(eval_left(z2p1, K)), tol, "eval_left(1+z^2, k) = 0");

    // Mis-ordered Lagrange product evaluates to (-1-i-j-k)/2 at i.
    const TxyzPoly bad = scale_right(
        txyz_mul(TxyzPoly::variable() - TxyzPoly::constant(J),
                 TxyzPoly::variable() - TxyzPoly::constant(K)),
        inverse(I - J) * inverse(I - K));
    c.require_close(abs(txyz_eval(bad, I) - Quaternion{-0.5, -0.5, -0.5, -0.5}), tol,
                    "mis-ordered product at i");

    // Cauchy-Feuter values.
    c.require_close((cauchy_feuter(TxyzPoly::variable()) -
                     TxyzPoly::constant(Quaternion::real(-2.0)))
                        .max_coeff_norm(),
                    tol, "2 d_l q = -2");
    c.require_close((cauchy_feuter(txyz_mul(t_plus_ix(), t_plus_jy())) -
                     TxyzPoly::monomial({0, 1, 0, 0}, 2.0 * I))
                        .max_coeff_norm(),
                    tol, "2 d_l ((t+ix)(t+jy)) = 2ix");
    c.require_close((cauchy_feuter(txyz_mul(it_minus_x(), jt_minus_y())) -
                     TxyzPoly::monomial({1, 0, 0, 0}, 2.0 * K))
                        .max_coeff_norm(),
                    tol, "2 d_l ((it-x)(jt-y)) = 2kt");
    c.require_close((cauchy_feuter(txyz_mul(jt_minus_y(), it_minus_x())) -
                     TxyzPoly::monomial({1, 0, 0, 0}, -2.0 * K))
                        .max_coeff_norm(),
                    tol, "2 d_l ((jt-y)(it-x)) = -2kt");

    const TxyzPoly sym = scale(
        txyz_mul(it_minus_x(), jt_minus_y()) + txyz_mul(jt_minus_y(), it_minus_x()), 0.5);
    c.require(classify(sym).regular, "symmetrized product is regular");

    // Barycentric formula at the nodes 0,1,i,j,k.
    std::mt19937_64 rng(2024);
    const std::vector<Quaternion> nodes = {Quaternion::zero(), Quaternion::one(), I, J, K};
    std::vector<Quaternion> data;
    for (int m = 0; m < 5; ++m) data.push_back(random_quat(rng));
    const TxyzPoly sol = barycentric_linear(nodes, data);
    TxyzPoly bary = TxyzPoly::constant(data[0]);
    bary = bary + TxyzPoly::monomial({1, 0, 0, 0}, data[1] - data[0]);
    bary = bary + TxyzPoly::monomial({0, 1, 0, 0}, data[2] - data[0]);
    bary = bary + TxyzPoly::monomial({0, 0, 1, 0}, data[3] - data[0]);
    bary = bary + TxyzPoly::monomial({0, 0, 0, 1}, data[4] - data[0]);
    c.require_close((sol - bary).max_coeff_norm(), tol,
                    "barycentric formula at 0,1,i,j,k");
}

void criterion_unisolvence(Checker& c) {
    c.require(!unisolvent_hz(PointSet({I, J, K})), "{i,j,k} rejected");
    c.require(unisolvent_hz(PointSet({{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}})),
              "{2i, i+j, i+k} accepted");

    // Scalar criterion (c-a)^{-1}(c^2-a^2) = (b-a)^{-1}(b^2-a^2) versus the
    // similarity-class test on 500 triples, 100 of them similar by
    // construction through random conjugation.
    std::mt19937_64 rng(77);
    int checked = 0, similar_count = 0;
    while (checked < 500) {
        Quaternion a = random_quat(rng), b, cc;
        const bool make_similar = checked < 100;
        if (make_similar) {
            const Quaternion s1 = random_unit(rng), s2 = random_unit(rng);
            b = s1 * a * inverse(s1);
            cc = s2 * a * inverse(s2);
        } else {
            b = random_quat(rng);
            cc = random_quat(rng);
        }
        if (std::min({abs(a - b), abs(a - cc), abs(b - cc)}) < 1e-2) continue;

        const Quaternion lhs = inverse(cc - a) * (cc * cc - a * a);
        const Quaternion rhs = inverse(b - a) * (b * b - a * a);
        const bool scalar_similar =
            abs(lhs - rhs) <= 1e-9 * std::max({1.0, abs(lhs), abs(rhs)});

        const Tolerance tol;
        const bool class_similar =
            similar(a, b, tol) && similar(a, cc, tol) && similar(b, cc, tol);

        if (scalar_similar != class_similar) {
            std::ostringstream os;
            os << "criterion mismatch on triple " << a << ", " << b << ", " << cc;
            c.require(false, os.str());
        }
        if (class_similar) ++similar_count;
        ++checked;
    }
    c.require(similar_count >= 100, "at least 100 similar triples exercised");
}

void criterion_hz_interpolation(Checker& c) {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 50; ++it) {
        const std::size_t degree = 1 + rng() % 6; // n in 1..6
        const auto pts_v = random_unisolvent(rng, degree + 1);
        const PointSet pts(pts_v);
        std::vector<Quaternion> values;
        double vnorm = 0.0;
        for (std::size_t m = 0; m <= degree; ++m) {
            values.push_back(random_quat(rng));
            vnorm = std::max(vnorm, abs(values.back()));
        }
        const FormalPoly p = interpolate_hz(pts, values);
        double residual = 0.0;
        for (std::size_t m = 0; m <= degree; ++m) {
            residual = std::max(residual, abs(eval_left(p, pts[m]) - values[m]));
        }
        c.require_close(residual, 1e-8 * (1.0 + vnorm), "vandermonde solve residual");

        // Newton build-up agrees with the direct solve at 50 probes.
        FormalPoly newton = FormalPoly::constant(values[0]);
        for (std::size_t m = 1; m <= degree; ++m) {
            const PointSet prev(std::vector<Quaternion>(
                pts_v.begin(), pts_v.begin() + static_cast<long>(m)));
            newton = newton_extend_hz(newton, prev, pts_v[m], values[m]).first;
        }
        double worst = 0.0;
        for (int probe = 0; probe < 50; ++probe) {
            const Quaternion x = random_quat(rng);
            worst = std::max(worst, abs(eval_left(newton, x) - eval_left(p, x)));
        }
        c.require_close(worst, 1e-8 * (1.0 + vnorm), "newton form matches direct solve");
    }

    const FormalPoly ann = annihilator_hz(PointSet({I, J}));
    const FormalPoly z2p1({Quaternion::one(), Quaternion::zero(), Quaternion::one()});
    double d = 0.0;
    for (std::size_t m = 0; m <= 2; ++m) d = std::max(d, abs(ann.coeff(m) - z2p1.coeff(m)));
    c.require_close(d, 1e-10, "annihilator_hz({i,j}) = z^2+1");
}

void criterion_lemma_dependency(Checker& c) {
    std::mt19937_64 rng(303);
    int done = 0;
    while (done < 100) {
        const Quaternion a = random_quat(rng);
        const Quaternion s1 = random_unit(rng), s2 = random_unit(rng);
        const Quaternion bb = s1 * a * inverse(s1);
        const Quaternion cc = s2 * a * inverse(s2);
        if (std::min({abs(a - bb), abs(a - cc), abs(bb - cc)}) < 1e-2) continue;
        const FormalPoly f = random_formal(rng, static_cast<int>(rng() % 7));
        const double res = similar_dependency_residual(a, bb, cc, f);
        c.require_close(res, 1e-9 * (1.0 + abs(eval_left(f, cc))),
                        "lemma dependency residual");
        ++done;
    }
}

void criterion_dimension_rank(Checker& c) {
    for (int r = 0; r <= 3; ++r) {
        const auto monos = hom_monomials(r);
        c.require(span_rank(monos) == static_cast<std::size_t>(dims(SpaceKind::Hom, r)),
                  "monomial span rank equals C(r+3,3)");
    }

    // Random words of degree r span the same space.
    std::mt19937_64 rng(404);
    for (int r = 1; r <= 3; ++r) {
        std::vector<TxyzPoly> words;
        const long dim = dims(SpaceKind::Hom, r);
        for (long m = 0; m < 2 * dim + 4; ++m) {
            QuatWord w;
            for (int l = 0; l <= r; ++l) w.letters.push_back(random_quat(rng, -1.0, 1.0));
            words.push_back(expand_word(w));
        }
        c.require(span_rank(words) == static_cast<std::size_t>(dim),
                  "expanded words span Hom_r");
    }

    for (int n = 0; n <= 3; ++n) {
        const auto monos = hom_monomials(n);
        std::vector<TxyzPoly> cf_images, lap_images;
        for (const TxyzPoly& m : monos) {
            cf_images.push_back(cauchy_feuter(m));
            lap_images.push_back(laplacian(m));
        }
        const long hom_dim = dims(SpaceKind::Hom, n);
        c.require(hom_dim - static_cast<long>(span_rank(cf_images)) ==
                      dims(SpaceKind::Reg, n),
                  "Cauchy-Feuter kernel rank on Hom_n");
        c.require(hom_dim - static_cast<long>(span_rank(lap_images)) ==
                      dims(SpaceKind::Harm, n),
                  "Laplacian kernel rank on Hom_n");

        const auto sud = sudbery_basis(n);
        const auto symb = symmetrized_regular_basis(n);
        c.require(static_cast<long>(sud.size()) == dims(SpaceKind::Reg, n) &&
                      span_rank(sud) == sud.size(),
                  "sudbery basis full rank");
        c.require(static_cast<long>(symb.size()) == dims(SpaceKind::Reg, n) &&
                      span_rank(symb) == symb.size(),
                  "symmetrized basis full rank");
        for (const TxyzPoly& p : sud) {
            c.require(classify(p).regular, "sudbery element regular");
        }
        for (const TxyzPoly& p : symb) {
            c.require(classify(p).regular, "symmetrized element regular");
        }
    }
}

void criterion_symmetrized_interpolation(Checker& c) {
    std::mt19937_64 rng(505);
    for (int it = 0; it < 20; ++it) {
        const std::size_t count = 2 + rng() % 5; // n <= 5
        std::vector<Quaternion> pts_v;
        // Keep regenerating until choice 1 is well-posed with margin.
        while (true) {
            pts_v = separated_points(rng, count);
            bool ok = true;
            for (std::size_t j = 0; j < count && ok; ++j) {
                std::vector<Quaternion> others;
                for (std::size_t m = 0; m < count; ++m) {
                    if (m != j) others.push_back(pts_v[m]);
                }
                const TxyzPoly ann = sym_annihilator(others);
                if (abs(txyz_eval(ann, pts_v[j])) <
                    0.05 * std::max(1.0, ann.max_coeff_norm())) {
                    ok = false;
                }
            }
            if (ok) break;
        }
        const PointSet pts(pts_v);

        for (const LagrangeChoice choice :
             {LagrangeChoice::QuotientNormalized, LagrangeChoice::SymmetrizedFactors}) {
            const LagrangeBasis basis = lagrange_basis(pts, choice);

            double delta_err = 0.0;
            for (std::size_t j = 0; j < count; ++j) {
                for (std::size_t k = 0; k < count; ++k) {
                    const Quaternion expect = j == k ? Quaternion::one() : Quaternion::zero();
                    delta_err = std::max(delta_err,
                                         abs(txyz_eval(basis.polys[j], pts[k]) - expect));
                }
            }
            c.require_close(delta_err, 1e-9, "delta property");

            // Permutation invariance, coefficientwise.
            auto shuffled = pts_v;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            const LagrangeBasis again = lagrange_basis(PointSet(shuffled), choice);
            double perm_err = 0.0;
            for (std::size_t j = 0; j < count; ++j) {
                std::size_t pos = 0;
                for (std::size_t m = 0; m < count; ++m) {
                    if (shuffled[m] == pts_v[j]) pos = m;
                }
                perm_err = std::max(
                    perm_err, (basis.polys[j] - again.polys[pos]).max_coeff_norm());
            }
            c.require(perm_err <= 1e-12, "permutation invariance of the basis");

            // Translation invariance at 20 probes.
            const Quaternion a = random_quat(rng, -1.0, 1.0);
            QuatWord w{{random_quat(rng, -1.0, 1.0), random_quat(rng, -1.0, 1.0),
                        random_quat(rng, -1.0, 1.0)}};
            const TxyzPoly f = expand_word(w);
            std::vector<Quaternion> tpts, tvals;
            for (const Quaternion& x : pts_v) {
                tpts.push_back(x + a);
                tvals.push_back(txyz_eval(f, x + a));
            }
            const TxyzPoly lhs = interpolate_sym(PointSet(tpts), tvals, choice);
            const TxyzPoly rhs = interpolate_sym(pts, tvals, choice);
            double trans_err = 0.0;
            for (int probe = 0; probe < 20; ++probe) {
                const Quaternion x = random_quat(rng);
                trans_err =
                    std::max(trans_err, abs(txyz_eval(lhs, x) - txyz_eval(rhs, x - a)));
            }
            c.require_close(trans_err, 1e-8, "translation invariance");

            // Continuity: perturbations of size <= 1e-6 move coefficients
            // by less than 1e-3.
            std::uniform_real_distribution<double> pd(-1e-6, 1e-6);
            std::vector<Quaternion> perturbed;
            for (const Quaternion& x : pts_v) {
                perturbed.push_back(x + Quaternion{pd(rng), pd(rng), pd(rng), pd(rng)});
            }
            const LagrangeBasis pert = lagrange_basis(PointSet(perturbed), choice);
            double cont_err = 0.0;
            for (std::size_t j = 0; j < count; ++j) {
                cont_err = std::max(
                    cont_err, (basis.polys[j] - pert.polys[j]).max_coeff_norm());
            }
            c.require_close(cont_err, 1e-3, "continuity in the points");
        }
    }

    // The {i,j} symmetrized annihilator vanishes at 0 exactly.
    const TxyzPoly ann = sym_annihilator(std::vector<Quaternion>{I, J});
    c.require(abs(txyz_eval(ann, Quaternion::zero())) == 0.0,
              "extra zero of the {i,j} annihilator at 0");
    c.require_close(abs(txyz_eval(ann, K) + Quaternion::one()), 1e-12,
                    "{i,j} annihilator at k equals -1");
}

void criterion_cross_consistency(Checker& c) {
    std::mt19937_64 rng(606);
    const std::vector<Quaternion> nodes = {Quaternion::zero(), Quaternion::one(), I, J, K};

    // Linear data: sample a random element of span{1, q, iq, jq, kq}.
    const TxyzPoly q = TxyzPoly::variable();
    TxyzPoly g = TxyzPoly::constant(random_quat(rng));
    g = g + scale_right(q, random_quat(rng));
    g = g + scale_right(scale_left(I, q), random_quat(rng));
    g = g + scale_right(scale_left(J, q), random_quat(rng));
    g = g + scale_right(scale_left(K, q), random_quat(rng));

    std::vector<Quaternion> data;
    for (const Quaternion& x : nodes) data.push_back(txyz_eval(g, x));

    const TxyzPoly direct = barycentric_linear(nodes, data);
    const TxyzPoly viasym =
        interpolate_sym(PointSet(nodes), data, LagrangeChoice::SymmetrizedFactors);

    // Both operators interpolate the same data, so they agree at the nodes.
    double node_err = 0.0;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        node_err = std::max(node_err, abs(txyz_eval(direct, nodes[m]) - data[m]));
        node_err = std::max(node_err, abs(txyz_eval(viasym, nodes[m]) - data[m]));
    }
    c.require_close(node_err, 1e-8, "both interpolants match the data at the nodes");

    // Away from the nodes the two interpolants are required to agree as
    // functions. The symmetrized operator is a projection onto the span of
    // its degree-4 Lagrange polynomials, which does not contain the linear
    // polynomials (the Lagrange polynomials are not a partition of unity),
    // so this agreement does not hold; the check is kept as specified.
    double worst = 0.0;
    for (int probe = 0; probe < 20; ++probe) {
        const Quaternion x = random_quat(rng);
        worst = std::max(worst, abs(txyz_eval(direct, x) - txyz_eval(viasym, x)));
    }
    c.require_close(worst, 1e-8, "interpolate_sym matches barycentric_linear at probes");

    double cd_worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const Quaternion x = random_quat(rng, -3.0, 3.0);
        const auto [v, w] = cayley_dickson(x);
        const Quaternion back = Quaternion{v.real(), v.imag(), 0, 0} +
                                J * Quaternion{w.real(), w.imag(), 0, 0};
        cd_worst = std::max(cd_worst, abs(x - back));
    }
    c.require_close(cd_worst, 1e-12, "Cayley-Dickson round trip");
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<void(Checker&)> run;
    };
    const std::vector<Entry> criteria = {
        {1, "paper worked-example suite", criterion_paper_examples},
        {2, "unisolvence characterization", criterion_unisolvence},
        {3, "H[z] interpolation", criterion_hz_interpolation},
        {4, "left-evaluation dependency for similar triples", criterion_lemma_dependency},
        {5, "dimension and rank suite", criterion_dimension_rank},
        {6, "symmetrized interpolation properties", criterion_symmetrized_interpolation},
        {7, "cross-consistency", criterion_cross_consistency},
    };

    int failed = 0;
    for (const Entry& entry : criteria) {
        Checker c;
        try {
            entry.run(c);
        } catch (const std::exception& e) {
            ++c.failures;
            c.notes.push_back(std::string("unexpected exception: ") + e.what());
        }
        std::printf("[%s] criterion %d: %s\n", c.failures == 0 ? "PASS" : "FAIL",
                    entry.id, entry.name);
        for (const std::string& note : c.notes) {
            std::printf("       %s\n", note.c_str());
        }
        if (c.failures != 0) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
