// hilbcert: multigraded Hilbert functions of ideals in Cox rings of products
// of projective spaces, with persistence certificates for constant Hilbert
// polynomials.
//
// Exit codes: 0 success (or certified / verified), 1 sound negative verdict,
// 2 input error, 3 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hilbcert/io.hpp"
#include "hilbcert/macaulay.hpp"

namespace hc = hilbcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CommonFlags {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 0;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    if (const char* env = std::getenv("HILBCERT_BUDGET")) {
        try {
            flags.budget = std::stoull(env);
        } catch (...) {
            throw hc::parse_error("HILBCERT_BUDGET is not a number");
        }
    }
    cmd->add_option("--budget", flags.budget,
                    "Enumeration/recursion budget (default 10^7; env "
                    "HILBCERT_BUDGET overrides)");
    cmd->add_option("--threads", flags.threads,
                    "Worker cap for parallel evaluation (0 = hardware)");
    cmd->add_option("--format", flags.format, "Output format: json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
}

hc::EvalOptions eval_options(const CommonFlags& flags,
                             bool allow_probabilistic = false) {
    return hc::EvalOptions{flags.budget, allow_probabilistic, flags.threads};
}

hc::Multidegree degree_arg(const std::vector<std::uint64_t>& v) {
    return hc::Multidegree{v};
}

void emit(const hc::json& j) { std::cout << j.dump() << "\n"; }

hc::NumericalPolynomial polynomial_from_flags(const std::string& file,
                                              const std::string& inline_json) {
    if (file.empty() == inline_json.empty())
        throw hc::parse_error(
            "provide exactly one of --poly-file and --poly-json");
    if (!file.empty()) return hc::polynomial_from_json(hc::load_json_file(file));
    try {
        return hc::polynomial_from_json(hc::json::parse(inline_json));
    } catch (const hc::json::parse_error& e) {
        throw hc::parse_error(std::string("invalid --poly-json: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hilbcert: multigraded Hilbert functions and constant-polynomial "
        "persistence certificates over products of projective spaces"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // hilbert-eval
    auto* eval_cmd = app.add_subcommand(
        "hilbert-eval", "Evaluate the Hilbert function of an ideal file");
    CommonFlags eval_flags;
    std::string eval_path;
    std::vector<std::uint64_t> eval_degree;
    bool eval_probabilistic = false;
    eval_cmd->add_option("ideal", eval_path, "Ideal JSON file")->required();
    eval_cmd->add_option("--degree", eval_degree, "Multidegree, e.g. 2,3")
        ->required()
        ->delimiter(',');
    eval_cmd->add_flag("--allow-probabilistic", eval_probabilistic,
                       "Permit prime-field rank (result marked unverified)");
    add_common(eval_cmd, eval_flags);
    eval_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(eval_path);
        hc::HilbertValue v = ideal.hilbert_value(
            degree_arg(eval_degree), eval_options(eval_flags, eval_probabilistic));
        if (eval_flags.format == "plain")
            std::cout << v.value.get_str()
                      << (v.probabilistic ? " (unverified)" : "") << "\n";
        else
            emit(hc::hilbert_value_to_json(v));
    });

    // hilbert-poly
    auto* poly_cmd = app.add_subcommand(
        "hilbert-poly", "Recover the Hilbert polynomial of a monomial ideal");
    CommonFlags poly_flags;
    std::string poly_path;
    poly_cmd->add_option("ideal", poly_path, "Ideal JSON file")->required();
    add_common(poly_cmd, poly_flags);
    poly_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(poly_path);
        hc::HilbertPolynomial hp =
            hc::hilbert_polynomial(ideal, eval_options(poly_flags));
        if (poly_flags.format == "plain") {
            std::cout << hp.polynomial.to_string() << "\n";
        } else {
            hc::json offset = hc::json::array();
            for (std::uint64_t x : hp.validated_offset.entries)
                offset.push_back(x);
            emit({{"polynomial", hc::polynomial_to_json(hp.polynomial)},
                  {"validated_offset", offset},
                  {"display", hp.polynomial.to_string()},
                  {"binomial_display", hp.polynomial.binomial_basis_string()}});
        }
    });

    // certify
    auto* certify_cmd = app.add_subcommand(
        "certify", "Constant-Hilbert-polynomial hypercube certificate");
    CommonFlags certify_flags;
    std::string certify_path;
    std::vector<std::uint64_t> certify_d;
    std::string certify_m;
    certify_cmd->add_option("ideal", certify_path, "Ideal JSON file")->required();
    certify_cmd->add_option("--d", certify_d, "Degree bound, e.g. 2,2")
        ->required()
        ->delimiter(',');
    certify_cmd->add_option("--m", certify_m, "Target constant value")
        ->required();
    add_common(certify_cmd, certify_flags);
    certify_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(certify_path);
        hc::Int m;
        try {
            m = hc::Int(certify_m);
        } catch (const std::invalid_argument&) {
            throw hc::parse_error("--m must be a natural number");
        }
        hc::CertificateVerdict verdict = hc::certify_constant(
            ideal, degree_arg(certify_d), m, eval_options(certify_flags));
        if (certify_flags.format == "plain")
            std::cout << hc::verdict_to_json(verdict)["status"]
                             .get<std::string>()
                      << "\n";
        else
            emit(hc::verdict_to_json(verdict));
        if (!verdict.certified()) exit_code = kExitNegative;
    });

    // gotzmann
    auto* gotz_cmd = app.add_subcommand(
        "gotzmann", "Gotzmann number of a univariate Hilbert polynomial");
    CommonFlags gotz_flags;
    std::vector<std::string> gotz_coeffs;
    gotz_cmd
        ->add_option("--poly", gotz_coeffs,
                     "Coefficients c0,c1,... (ascending powers, exact "
                     "rationals)")
        ->required()
        ->delimiter(',');
    add_common(gotz_cmd, gotz_flags);
    gotz_cmd->callback([&] {
        hc::NumericalPolynomial P = hc::polynomial_from_coeff_strings(gotz_coeffs);
        hc::GotzmannResult r = hc::gotzmann_number(P);
        if (gotz_flags.format == "plain") {
            std::cout << r.number << "\n";
        } else {
            hc::json rep = hc::json::array();
            for (std::uint64_t a : r.rep.degrees) rep.push_back(a);
            emit({{"gotzmann_number", r.number}, {"rep", rep}});
        }
    });

    // macaulay-growth
    auto* growth_cmd =
        app.add_subcommand("macaulay-growth", "alpha^<d> and the Macaulay "
                                              "representation of alpha");
    CommonFlags growth_flags;
    std::string growth_alpha;
    std::uint64_t growth_d = 1;
    growth_cmd->add_option("--alpha", growth_alpha, "Natural number")
        ->required();
    growth_cmd->add_option("--d", growth_d, "Positive representation degree")
        ->required();
    add_common(growth_cmd, growth_flags);
    growth_cmd->callback([&] {
        hc::Int alpha;
        try {
            alpha = hc::Int(growth_alpha);
        } catch (const std::invalid_argument&) {
            throw hc::parse_error("--alpha must be a natural number");
        }
        hc::MacaulayRep rep = hc::macaulay_rep(alpha, growth_d);
        hc::Int grown = hc::macaulay_growth(alpha, growth_d);
        if (growth_flags.format == "plain") {
            std::cout << grown.get_str() << "\n";
        } else {
            hc::json kappas = hc::json::array();
            for (const hc::Int& k : rep.kappas)
                kappas.push_back(hc::int_to_json(k));
            emit({{"alpha", hc::int_to_json(alpha)},
                  {"d", growth_d},
                  {"growth", hc::int_to_json(grown)},
                  {"kappas", kappas}});
        }
    });

    // slice
    auto* slice_cmd = app.add_subcommand(
        "slice", "Module slice along the last factor at a fixed prefix");
    CommonFlags slice_flags;
    std::string slice_path;
    std::vector<std::uint64_t> slice_prefix;
    std::uint64_t slice_umax = 0;
    slice_cmd->add_option("ideal", slice_path, "Ideal JSON file")->required();
    slice_cmd
        ->add_option("--prefix", slice_prefix,
                     "Fixed degrees d_1,...,d_{s-1} (omit for s = 1)")
        ->delimiter(',');
    slice_cmd->add_option("--u-max", slice_umax, "Largest stored degree")
        ->required();
    add_common(slice_cmd, slice_flags);
    slice_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(slice_path);
        hc::ModuleSlice slice = hc::module_slice(ideal, slice_prefix, slice_umax,
                                                 eval_options(slice_flags));
        emit(hc::slice_to_json(slice));
    });

    // gasharov
    auto* gash_cmd = app.add_subcommand(
        "gasharov", "Growth/persistence check on a module slice file");
    CommonFlags gash_flags;
    std::string gash_path;
    std::uint64_t gash_d = 1;
    gash_cmd->add_option("slice", gash_path, "Slice JSON file")->required();
    gash_cmd->add_option("--d", gash_d, "Degree to check")->required();
    add_common(gash_cmd, gash_flags);
    gash_cmd->callback([&] {
        hc::ModuleSlice slice = hc::load_slice_file(gash_path);
        hc::GasharovResult result = hc::gasharov_check(slice, gash_d);
        emit(hc::gasharov_to_json(result));
    });

    // grid
    auto* grid_cmd =
        app.add_subcommand("grid", "Exhaustive Hilbert-function grid as CSV");
    CommonFlags grid_flags;
    std::string grid_path, grid_out;
    std::vector<std::uint64_t> grid_lower, grid_upper;
    grid_cmd->add_option("ideal", grid_path, "Ideal JSON file")->required();
    grid_cmd->add_option("--lower", grid_lower, "Box corner, e.g. 0,0")
        ->required()
        ->delimiter(',');
    grid_cmd->add_option("--upper", grid_upper, "Box corner, e.g. 3,3")
        ->required()
        ->delimiter(',');
    grid_cmd->add_option("--out", grid_out, "Write CSV here instead of stdout");
    add_common(grid_cmd, grid_flags);
    grid_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(grid_path);
        hc::HilbertGrid grid =
            hc::compute_grid(ideal, degree_arg(grid_lower),
                             degree_arg(grid_upper), eval_options(grid_flags));
        if (grid_out.empty()) {
            hc::write_grid_csv(std::cout, grid);
        } else {
            std::ofstream out(grid_out);
            if (!out) throw hc::parse_error("cannot write " + grid_out);
            hc::write_grid_csv(out, grid);
        }
    });

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Refutation-only persistence check on a finite box");
    CommonFlags verify_flags;
    std::string verify_path, verify_poly_file, verify_poly_json,
        verify_constant;
    std::vector<std::uint64_t> verify_d;
    std::uint64_t verify_horizon = 5;
    verify_cmd->add_option("ideal", verify_path, "Ideal JSON file")->required();
    verify_cmd->add_option("--d", verify_d, "Box corner")->required()->delimiter(
        ',');
    verify_cmd->add_option("--poly-file", verify_poly_file,
                           "Polynomial JSON file");
    verify_cmd->add_option("--poly-json", verify_poly_json,
                           "Inline polynomial JSON");
    verify_cmd->add_option("--constant", verify_constant,
                           "Shorthand for the constant polynomial m");
    verify_cmd->add_option("--horizon", verify_horizon,
                           "Box edge length (default 5)");
    add_common(verify_cmd, verify_flags);
    verify_cmd->callback([&] {
        hc::MultigradedIdeal ideal = hc::load_ideal_file(verify_path);
        hc::NumericalPolynomial P(1);
        if (!verify_constant.empty()) {
            if (!verify_poly_file.empty() || !verify_poly_json.empty())
                throw hc::parse_error("--constant excludes --poly-file/json");
            P = hc::NumericalPolynomial::constant(
                static_cast<unsigned>(ideal.ring().factor_count()),
                hc::Rat(hc::parse_rational(verify_constant)));
        } else {
            P = polynomial_from_flags(verify_poly_file, verify_poly_json);
        }
        hc::PersistenceReport report =
            hc::verify_persistence(ideal, degree_arg(verify_d), P,
                                   verify_horizon, eval_options(verify_flags));
        emit(hc::persistence_to_json(report));
        if (!report.ok) exit_code = kExitNegative;
    });

    // min-point
    auto* minpt_cmd = app.add_subcommand(
        "min-point", "Certificate corner (d1, Gotzmann number of P(d1,.))");
    CommonFlags minpt_flags;
    std::string minpt_poly_file, minpt_poly_json;
    std::uint64_t minpt_d1 = 0;
    minpt_cmd->add_option("--poly-file", minpt_poly_file,
                          "Bivariate polynomial JSON file");
    minpt_cmd->add_option("--poly-json", minpt_poly_json,
                          "Inline bivariate polynomial JSON");
    minpt_cmd->add_option("--d1", minpt_d1, "First coordinate")->required();
    add_common(minpt_cmd, minpt_flags);
    minpt_cmd->callback([&] {
        hc::NumericalPolynomial P =
            polynomial_from_flags(minpt_poly_file, minpt_poly_json);
        hc::Multidegree point = hc::min_certificate_point_2d(P, minpt_d1);
        if (minpt_flags.format == "plain") {
            std::cout << hc::to_string(point) << "\n";
        } else {
            hc::json pt = hc::json::array();
            for (std::uint64_t x : point.entries) pt.push_back(x);
            emit({{"point", pt}});
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const hc::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hc::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return exit_code;
}
