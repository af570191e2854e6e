#include "symdec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "symdec/bounds.hpp"
#include "symdec/construct.hpp"
#include "symdec/dual.hpp"
#include "symdec/example_d2.hpp"
#include "symdec/family.hpp"
#include "symdec/json_io.hpp"
#include "symdec/welch.hpp"

namespace symdec {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

// Accepts a matrix file path or the shorthand identity:<d>.
HermitianMatrix load_T(const std::string& spec) {
    if (spec.rfind("identity:", 0) == 0) {
        const int d = std::stoi(spec.substr(9));
        if (d < 1) throw std::invalid_argument("identity dimension must be >= 1");
        return HermitianMatrix::identity(d);
    }
    return matrix_from_json(read_json_file(spec));
}

std::optional<std::uint64_t> parse_seed(const std::string& seed) {
    if (seed == "canonical") return std::nullopt;
    try {
        return std::stoull(seed);
    } catch (const std::exception&) {
        throw std::invalid_argument("--seed must be an integer or \"canonical\"");
    }
}

std::vector<double> parse_spectrum(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("--spectrum must list at least one value");
    return out;
}

struct VerifyArgs {
    std::string family_path;
    std::string t_spec;
    double tol = 1e-8;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const FamilyFile file = family_from_json(read_json_file(a.family_path));
    const SymmetricFamily fam = fit_parameters(file.members);

    std::optional<HermitianMatrix> T;
    if (!a.t_spec.empty())
        T = load_T(a.t_spec);
    else if (file.T)
        T = file.T;

    json result = fit_to_json(fam);
    result["tol"] = a.tol;
    const bool symmetric = fam.is_symmetric(a.tol);
    result["symmetric"] = symmetric;

    bool decomposes = true;
    if (T) {
        const DecompositionReport rep = verify_decomposition(fam, *T, a.tol);
        decomposes = rep.residual <= a.tol * (1.0 + hs_norm(*T));
        result["decomposition"] = decomposition_report_to_json(rep);
        result["decomposes"] = decomposes;
    } else {
        result["decomposition"] = nullptr;
    }
    out << result.dump(2) << "\n";
    return (symmetric && decomposes) ? 0 : 1;
}

struct ConstructArgs {
    std::string t_spec;
    int n = 0;
    std::optional<double> x;
    std::string x_mode;
    std::string seed = "canonical";
    std::string output;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
    if (a.x.has_value() == !a.x_mode.empty())
        throw std::invalid_argument("construct needs exactly one of --x and --x-mode");

    const HermitianMatrix T = load_T(a.t_spec);
    const ConstructionBasis basis = build_basis(T, a.n, parse_seed(a.seed));

    std::optional<PsdWindow> window;
    if (!a.x_mode.empty()) {
        window = psd_window(basis);
    } else {
        try {
            window = psd_window(basis);
        } catch (const std::exception&) {
            // explicit --x works for indefinite T as well; no window then
        }
    }

    double x = 0.0;
    if (a.x)
        x = *a.x;
    else
        x = (a.x_mode == "suf") ? window->x_sufficient : window->x_exact;

    const SymmetricFamily fam = build_family(basis, x);
    const json family_json = family_to_json(fam.members, &T);

    json result;
    result["N"] = a.n;
    result["d"] = T.dim();
    result["x"] = x;
    result["a"] = fam.a_fit;
    result["b"] = fam.b_fit;
    result["window"] = window ? window_to_json(*window) : json(nullptr);
    if (a.output.empty()) {
        result["family"] = family_json;
    } else {
        write_text_file(a.output, family_json.dump(2) + "\n");
        result["output"] = a.output;
    }
    out << result.dump(2) << "\n";
    return 0;
}

struct BoundsArgs {
    std::string t_spec;
    int n = 0;
    std::string family_path;
    double tol = 1e-8;
};

int run_bounds(const BoundsArgs& a, std::ostream& out) {
    const HermitianMatrix T = load_T(a.t_spec);
    std::optional<SymmetricFamily> fam;
    if (!a.family_path.empty())
        fam = fit_parameters(family_from_json(read_json_file(a.family_path)).members);
    const BoundsReport rep = a_bounds(T, a.n, fam ? &*fam : nullptr, a.tol);
    out << bounds_to_json(rep).dump(2) << "\n";
    return 0;
}

struct DualArgs {
    std::string family_path;
    std::string t_spec;
    bool normalized = false;
    std::string output;
    double tol = 1e-8;
};

int run_dual(const DualArgs& a, std::ostream& out) {
    const FamilyFile file = family_from_json(read_json_file(a.family_path));
    const SymmetricFamily fam = fit_parameters(file.members);

    std::optional<HermitianMatrix> T;
    if (!a.t_spec.empty())
        T = load_T(a.t_spec);
    else if (file.T)
        T = file.T;
    if (a.normalized && !T)
        throw std::invalid_argument("dual --normalized needs T (flag or family file)");

    SymmetricFamily result_family =
        a.normalized ? normalized_dual(fam, *T, a.tol)
                     : (T ? dual_of_decomposition(fam, *T, a.tol) : dual_family(fam, a.tol));

    json params;
    const int n = fam.size();
    const double denom = (fam.a_fit - fam.b_fit) * (fam.a_fit + fam.b_fit * (n - 1));
    params["a_tilde"] = (fam.a_fit + fam.b_fit * (n - 2)) / denom;
    params["b_tilde"] = -fam.b_fit / denom;
    if (T) {
        const DualParameters p = dual_parameters(fam.a_fit, fam.b_fit, n, hs_inner(*T, *T));
        params = dual_parameters_to_json(p);
    } else {
        params["a_hat"] = nullptr;
        params["b_hat"] = nullptr;
        params["x_hat"] = nullptr;
    }

    const json family_json =
        family_to_json(result_family.members, a.normalized && T ? &*T : nullptr);
    json result;
    result["params"] = params;
    result["dual_fit"] = fit_to_json(result_family);
    if (a.output.empty()) {
        result["family"] = family_json;
    } else {
        write_text_file(a.output, family_json.dump(2) + "\n");
        result["output"] = a.output;
    }
    out << result.dump(2) << "\n";
    return 0;
}

struct WelchArgs {
    std::string family_path;
    std::string weights_path;
    std::optional<double> p;
    bool min_angle = false;
    bool normalize = false;
};

int run_welch(const WelchArgs& a, std::ostream& out) {
    const FamilyFile file = family_from_json(read_json_file(a.family_path));
    const int n = static_cast<int>(file.members.size());
    const WeightVector weights = a.weights_path.empty()
                                     ? WeightVector::ones(n)
                                     : weights_from_json(read_json_file(a.weights_path));

    WelchReport rep;
    if (a.min_angle)
        rep = min_angle_bound(file.members, weights, a.normalize);
    else if (a.p)
        rep = holder_welch(file.members, weights, *a.p, a.normalize);
    else if (!a.weights_path.empty())
        rep = weighted_welch(file.members, weights, a.normalize);
    else
        rep = simplex_bound(file.members);
    out << welch_to_json(rep).dump(2) << "\n";
    return 0;
}

struct PhiArgs {
    std::string spectrum;
    bool oracle = false;
    int trials = 1000;
    std::uint64_t seed = 20240229u;
};

int run_phi(const PhiArgs& a, std::ostream& out) {
    const std::vector<double> b = parse_spectrum(a.spectrum);
    const double closed = phi_closed_form(b);
    if (!a.oracle) {
        out << dtos(closed) << "\n";
        return 0;
    }
    const PhiOracleResult res = phi_oracle(b, a.trials, a.seed);
    json result{{"phi", closed},
                {"oracle_value", res.value},
                {"difference", std::abs(closed - res.value)},
                {"mc_trials", a.trials},
                {"mc_violations", res.mc_violations},
                {"mc_min_lambda_max", res.mc_min_lambda_max}};
    out << result.dump(2) << "\n";
    const bool agreed = std::abs(closed - res.value) <= 1e-7 && res.mc_violations == 0;
    return agreed ? 0 : 1;
}

struct ExampleArgs {
    double u_min = 1.0;
    double u_max = 3.0;
    int steps = 201;
    std::string output;
};

int run_example(const ExampleArgs& a, std::ostream& out) {
    const std::vector<SweepRow> rows = sweep(a.u_min, a.u_max, a.steps);
    std::ostringstream csv;
    write_csv(csv, rows);
    if (a.output.empty()) {
        out << csv.str();
    } else {
        write_text_file(a.output, csv.str());
        double max_gap = 0.0;
        for (const auto& r : rows) max_gap = std::max(max_gap, r.gap);
        json summary{{"rows", a.steps}, {"max_gap", max_gap}, {"output", a.output}};
        out << summary.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetric decompositions of self-adjoint operators"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Fit symmetry parameters, verify a decomposition");
    verify_cmd->add_option("family", verify_args.family_path, "family JSON file")->required();
    verify_cmd->add_option("--T", verify_args.t_spec, "target matrix file or identity:<d>");
    verify_cmd->add_option("--tol", verify_args.tol, "tolerance");

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "Build a symmetric decomposition family");
    construct_cmd->add_option("--T", construct_args.t_spec, "target matrix file or identity:<d>")
        ->required();
    construct_cmd->add_option("--N", construct_args.n, "family size")->required();
    construct_cmd->add_option("--x", construct_args.x, "explicit symmetry parameter x");
    construct_cmd->add_option("--x-mode", construct_args.x_mode, "pick x from the PSD window")
        ->check(CLI::IsMember({"suf", "exact"}));
    construct_cmd->add_option("--seed", construct_args.seed, "basis seed or \"canonical\"");
    construct_cmd->add_option("-o,--output", construct_args.output, "family JSON output path");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds on the parameter a");
    bounds_cmd->add_option("--T", bounds_args.t_spec, "target matrix file or identity:<d>")->required();
    bounds_cmd->add_option("--N", bounds_args.n, "family size")->required();
    bounds_cmd->add_option("--family", bounds_args.family_path, "family JSON for the condition bound");

    DualArgs dual_args;
    auto* dual_cmd = app.add_subcommand("dual", "Dual or normalized-dual family");
    dual_cmd->add_option("family", dual_args.family_path, "family JSON file")->required();
    dual_cmd->add_option("--T", dual_args.t_spec, "target matrix file or identity:<d>");
    dual_cmd->add_flag("--normalized", dual_args.normalized, "rescale so the dual decomposes T");
    dual_cmd->add_option("-o,--output", dual_args.output, "dual family JSON output path");

    WelchArgs welch_args;
    auto* welch_cmd = app.add_subcommand("welch", "Welch-type inequalities");
    welch_cmd->add_option("family", welch_args.family_path, "family JSON file")->required();
    welch_cmd->add_option("--weights", welch_args.weights_path, "weights JSON file");
    welch_cmd->add_option("--p", welch_args.p, "Holder exponent (> 1)");
    welch_cmd->add_flag("--min-angle", welch_args.min_angle, "minimal-angle corollary");
    welch_cmd->add_flag("--normalize", welch_args.normalize, "rescale members to unit HS norm");

    PhiArgs phi_args;
    auto* phi_cmd = app.add_subcommand("phi", "Optimization value phi(B)");
    phi_cmd->add_option("--spectrum", phi_args.spectrum, "comma-separated positive eigenvalues")
        ->required();
    phi_cmd->add_flag("--oracle", phi_args.oracle, "cross-check with the independent oracle");
    phi_cmd->add_option("--trials", phi_args.trials, "Monte Carlo sample count");

    ExampleArgs example_args;
    auto* example_cmd = app.add_subcommand("example-u", "Bound sweep for T = diag(1,u)");
    example_cmd->add_option("--u-min", example_args.u_min, "lower end of the u grid");
    example_cmd->add_option("--u-max", example_args.u_max, "upper end of the u grid");
    example_cmd->add_option("--steps", example_args.steps, "grid size");
    example_cmd->add_option("-o,--output", example_args.output, "CSV output path");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(verify_args, out);
        if (construct_cmd->parsed()) return run_construct(construct_args, out);
        if (bounds_cmd->parsed()) return run_bounds(bounds_args, out);
        if (dual_cmd->parsed()) return run_dual(dual_args, out);
        if (welch_cmd->parsed()) return run_welch(welch_args, out);
        if (phi_cmd->parsed()) return run_phi(phi_args, out);
        if (example_cmd->parsed()) return run_example(example_args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace symdec
