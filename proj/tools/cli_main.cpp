// Command-line front end: interpolation, annihilators, basis generation,
// classification, dimension queries and evaluation over JSON documents.
//
// Results go to standard output as a single JSON document; diagnostics go to
// standard error. Exit codes: 0 success, 2 mathematical failure (with a
// machine-readable reason), 3 input or parse error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatinterp/bases.hpp"
#include "quatinterp/hz_interp.hpp"
#include "quatinterp/json_io.hpp"
#include "quatinterp/sym_interp.hpp"

namespace {

using namespace quatinterp;

struct Options {
    std::string points;
    std::string values;
    std::string poly;
    std::string at;
    std::string kind = "hz";
    int choice = 2;
    int n = 0;
    double tol = 1e-9;
    unsigned long seed = 0;
};

// Inline JSON starts with an array or object; anything else is a file path.
std::string load_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return arg;
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open input file: " + arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_error(ErrorReason reason, const std::string& message) {
    std::cout << "{\"error\":{\"reason\":\"" << to_slug(reason) << "\",\"message\":\""
              << message << "\"}}\n";
}

// Round-trip self check: serialize, re-parse, compare evaluations at seeded
// probe points. Reported on stderr so output stays machine-consumable.
void roundtrip_report(const std::string& doc, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const ParsedPoly parsed = parse_poly(doc);
    double worst = 0.0;
    for (int probe = 0; probe < 10; ++probe) {
        const Quaternion a{dist(rng), dist(rng), dist(rng), dist(rng)};
        Quaternion v1, v2;
        if (parsed.is_formal) {
            const ParsedPoly again = parse_poly(emit(parsed.formal));
            v1 = eval_left(parsed.formal, a);
            v2 = eval_left(again.formal, a);
        } else {
            const ParsedPoly again = parse_poly(emit(parsed.txyz));
            v1 = txyz_eval(parsed.txyz, a);
            v2 = txyz_eval(again.txyz, a);
        }
        worst = std::max(worst, abs(v1 - v2));
    }
    std::cerr << "round-trip max deviation at 10 probes: " << emit_double(worst) << "\n";
}

int run_interp_hz(const Options& opt) {
    const PointSet pts(parse_points(load_arg(opt.points)), Tolerance{opt.tol});
    const std::vector<Quaternion> values = parse_points(load_arg(opt.values));
    const FormalPoly p = interpolate_hz(pts, values);

    double residual = 0.0;
    for (std::size_t m = 0; m < pts.size(); ++m) {
        residual = std::max(residual, abs(eval_left(p, pts[m]) - values[m]));
    }
    std::cerr << "node residual max: " << emit_double(residual) << "\n";

    const std::string doc = emit(p);
    roundtrip_report(doc, opt.seed);
    std::cout << doc << "\n";
    return 0;
}

int run_interp_sym(const Options& opt) {
    const PointSet pts(parse_points(load_arg(opt.points)), Tolerance{opt.tol});
    const std::vector<Quaternion> values = parse_points(load_arg(opt.values));
    const LagrangeChoice choice = opt.choice == 1 ? LagrangeChoice::QuotientNormalized
                                                  : LagrangeChoice::SymmetrizedFactors;
    const TxyzPoly p = interpolate_sym(pts, values, choice);

    double residual = 0.0;
    for (std::size_t m = 0; m < pts.size(); ++m) {
        residual = std::max(residual, abs(txyz_eval(p, pts[m]) - values[m]));
    }
    std::cerr << "node residual max: " << emit_double(residual) << "\n";

    const LagrangeBasis basis = lagrange_basis(pts, choice);
    std::cerr << "partition-of-unity defect: "
              << emit_double(partition_of_unity_defect(basis.polys)) << "\n";

    const std::string doc = emit(p);
    roundtrip_report(doc, opt.seed);
    std::cout << doc << "\n";
    return 0;
}

int run_annihilator(const Options& opt) {
    const std::vector<Quaternion> raw = parse_points(load_arg(opt.points));
    if (opt.kind == "sym") {
        const TxyzPoly p = sym_annihilator(raw);
        const std::string doc = emit(p);
        roundtrip_report(doc, opt.seed);
        std::cout << doc << "\n";
        return 0;
    }
    if (opt.kind != "hz") throw ParseError("annihilator kind must be hz or sym");
    const PointSet pts(raw, Tolerance{opt.tol});
    const FormalPoly p = annihilator_hz(pts);
    const std::string doc = emit(p);
    roundtrip_report(doc, opt.seed);
    std::cout << doc << "\n";
    return 0;
}

int run_basis(const Options& opt) {
    if (opt.kind == "lagrange") {
        const PointSet pts(parse_points(load_arg(opt.points)), Tolerance{opt.tol});
        const LagrangeChoice choice = opt.choice == 1
                                          ? LagrangeChoice::QuotientNormalized
                                          : LagrangeChoice::SymmetrizedFactors;
        std::cout << emit(lagrange_basis(pts, choice)) << "\n";
        return 0;
    }

    std::vector<TxyzPoly> polys;
    if (opt.kind == "hom") {
        polys = hom_monomials(opt.n);
    } else if (opt.kind == "pol") {
        polys = pol_monomials(opt.n);
    } else if (opt.kind == "sudbery" || opt.kind == "reg") {
        polys = sudbery_basis(opt.n);
    } else if (opt.kind == "symmetrized") {
        polys = symmetrized_regular_basis(opt.n);
    } else {
        throw ParseError("basis kind must be hom, pol, reg, sudbery, symmetrized or lagrange");
    }
    std::cout << "{\"type\":\"basis\",\"kind\":\"" << opt.kind << "\",\"n\":" << opt.n
              << ",\"count\":" << polys.size() << ",\"polys\":[";
    for (std::size_t m = 0; m < polys.size(); ++m) {
        if (m) std::cout << ',';
        std::cout << emit(polys[m]);
    }
    std::cout << "]}\n";
    return 0;
}

int run_check(const Options& opt) {
    const ParsedPoly parsed = parse_poly(load_arg(opt.poly));
    const TxyzPoly p = parsed.is_formal ? formal_to_txyz(parsed.formal) : parsed.txyz;
    const Classification c = classify(p, Tolerance{opt.tol});
    std::cout << "{\"regular\":" << (c.regular ? "true" : "false")
              << ",\"harmonic\":" << (c.harmonic ? "true" : "false") << "}\n";
    return 0;
}

int run_dims(const Options& opt) {
    SpaceKind kind;
    if (opt.kind == "hom") kind = SpaceKind::Hom;
    else if (opt.kind == "pol") kind = SpaceKind::Pol;
    else if (opt.kind == "reg") kind = SpaceKind::Reg;
    else if (opt.kind == "harm") kind = SpaceKind::Harm;
    else throw ParseError("dims kind must be hom, pol, reg or harm");
    std::cout << "{\"kind\":\"" << opt.kind << "\",\"n\":" << opt.n
              << ",\"dim\":" << dims(kind, opt.n) << "}\n";
    return 0;
}

int run_eval(const Options& opt) {
    const ParsedPoly parsed = parse_poly(load_arg(opt.poly));
    const Quaternion at = parse_quaternion(load_arg(opt.at));
    const Quaternion v =
        parsed.is_formal ? eval_left(parsed.formal, at) : txyz_eval(parsed.txyz, at);
    std::cout << "{\"value\":" << emit(v) << "}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic polynomial interpolation toolkit"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opt.tol, "comparison tolerance")
            ->check(CLI::PositiveNumber)
            ->default_val(1e-9);
        cmd->add_option("--seed", opt.seed, "seed for diagnostic probe points")
            ->default_val(0);
    };

    CLI::App* interp_hz = app.add_subcommand(
        "interp-hz", "left Lagrange interpolation from formal polynomials");
    interp_hz->add_option("--points", opt.points, "points: JSON array or file")->required();
    interp_hz->add_option("--values", opt.values, "values: JSON array or file")->required();
    add_common(interp_hz);

    CLI::App* interp_sym = app.add_subcommand(
        "interp-sym", "order-independent interpolation by quaternionic polynomials");
    interp_sym->add_option("--points", opt.points, "points: JSON array or file")->required();
    interp_sym->add_option("--values", opt.values, "values: JSON array or file")->required();
    interp_sym->add_option("--choice", opt.choice, "Lagrange construction: 1 or 2")
        ->check(CLI::Range(1, 2))
        ->default_val(2);
    add_common(interp_sym);

    CLI::App* annihilator = app.add_subcommand(
        "annihilator", "polynomial vanishing at the given points");
    annihilator->add_option("--points", opt.points, "points: JSON array or file")->required();
    annihilator->add_option("--kind", opt.kind, "hz (formal, default) or sym");
    add_common(annihilator);

    CLI::App* basis = app.add_subcommand("basis", "basis generation");
    basis->add_option("--kind", opt.kind,
                      "hom | pol | reg | sudbery | symmetrized | lagrange")
        ->required();
    basis->add_option("--n", opt.n, "degree");
    basis->add_option("--points", opt.points, "points (kind=lagrange)");
    basis->add_option("--choice", opt.choice, "Lagrange construction: 1 or 2")
        ->check(CLI::Range(1, 2))
        ->default_val(2);
    add_common(basis);

    CLI::App* check = app.add_subcommand("check", "regularity and harmonicity");
    check->add_option("--poly", opt.poly, "polynomial document or file")->required();
    add_common(check);

    CLI::App* dims_cmd = app.add_subcommand("dims", "space dimensions over H");
    dims_cmd->add_option("--kind", opt.kind, "hom | pol | reg | harm")->required();
    dims_cmd->add_option("--n", opt.n, "degree")->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at a point");
    eval_cmd->add_option("--poly", opt.poly, "polynomial document or file")->required();
    eval_cmd->add_option("--at", opt.at, "quaternion [t,x,y,z]")->required();
    add_common(eval_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 3;
    }

    try {
        if (interp_hz->parsed()) return run_interp_hz(opt);
        if (interp_sym->parsed()) return run_interp_sym(opt);
        if (annihilator->parsed()) return run_annihilator(opt);
        if (basis->parsed()) return run_basis(opt);
        if (check->parsed()) return run_check(opt);
        if (dims_cmd->parsed()) return run_dims(opt);
        if (eval_cmd->parsed()) return run_eval(opt);
    } catch (const MathError& e) {
        print_error(e.reason(), e.what());
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
