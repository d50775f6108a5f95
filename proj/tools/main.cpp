// Command-line front end: evaluate any primitive or run verification suites.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or domain error.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperell/elliptic.hpp"
#include "hyperell/finite_field.hpp"
#include "hyperell/rational.hpp"
#include "hyperell/report_io.hpp"
#include "hyperell/special_functions.hpp"
#include "hyperell/verify.hpp"

namespace {

using namespace hyperell;

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_complex(std::complex<double> v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.15g %+.15gi", v.real(), v.imag());
    return buf;
}

// Accepts either a decimal float or an exact "p/q".
double parse_real(const std::string& text) {
    if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("malformed real number: " + text);
    return v;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    return out;
}

// Character exponents: comma-separated integers, reduced mod p-1.
std::vector<ff::Character> parse_character_list(const ff::PrimeContext& ctx,
                                                const std::string& text) {
    std::vector<ff::Character> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long k = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed exponent: " + item);
        const long long m = ctx.p() - 1;
        out.push_back(ctx.character(static_cast<std::uint32_t>(((k % m) + m) % m)));
    }
    if (out.empty()) throw std::invalid_argument("empty character list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergeometric identities of the curves y^2 = (x-1)(x^2+lambda): "
                 "classical series, AGM periods, and their finite-field analogues"};
    app.require_subcommand(1);

    // hyp
    std::string hyp_upper, hyp_lower;
    double hyp_z = 0.0, hyp_tol = 1e-12;
    auto* hyp = app.add_subcommand("hyp", "Evaluate pFq(upper; lower | z) by series");
    hyp->add_option("--upper", hyp_upper, "Upper parameters, comma-separated rationals p/q")->required();
    hyp->add_option("--lower", hyp_lower, "Lower parameters, comma-separated rationals p/q")->required();
    hyp->add_option("--z", hyp_z, "Argument")->required();
    hyp->add_option("--tol", hyp_tol, "Relative stopping tolerance");

    // agm
    double agm_a = 0.0, agm_b = 0.0, agm_tol = 1e-15;
    auto* agm_cmd = app.add_subcommand("agm", "Arithmetic-geometric mean of two positive reals");
    agm_cmd->add_option("alpha", agm_a)->required();
    agm_cmd->add_option("beta", agm_b)->required();
    agm_cmd->add_option("--tol", agm_tol, "Convergence tolerance");

    // gamma
    double gamma_x = 0.0;
    auto* gamma_cmd = app.add_subcommand("gamma", "Gamma function of a real argument");
    gamma_cmd->add_option("x", gamma_x)->required();

    // binom
    std::string binom_n, binom_k;
    auto* binom_cmd = app.add_subcommand("binom", "Binomial coefficient with rational arguments");
    binom_cmd->add_option("n", binom_n, "Rational p/q")->required();
    binom_cmd->add_option("k", binom_k, "Rational p/q")->required();

    // period
    std::string period_lambda, period_method = "agm";
    auto* period_cmd =
        app.add_subcommand("period", "Real period of y^2 = (x-1)(x^2+lambda), lambda > 0");
    period_cmd->add_option("--lambda", period_lambda, "lambda (float or p/q)")->required();
    period_cmd->add_option("--method", period_method, "agm or 2f1")
        ->check(CLI::IsMember({"agm", "2f1"}));

    // trace
    std::string trace_lambda, trace_curve;
    std::uint32_t trace_p = 0;
    auto* trace_cmd = app.add_subcommand("trace", "Trace of Frobenius a_p");
    auto* trace_lam_opt =
        trace_cmd->add_option("--lambda", trace_lambda, "lambda p/q for y^2 = (x-1)(x^2+lambda)");
    auto* trace_curve_opt = trace_cmd->add_option(
        "--curve", trace_curve, "a1,a2,a3,a4,a6 rationals of a general Weierstrass curve");
    trace_lam_opt->excludes(trace_curve_opt);
    trace_cmd->add_option("--prime", trace_p, "Odd prime of good reduction")->required();

    // gauss
    std::uint32_t gauss_p = 0, gauss_k = 0;
    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum G(chi), chi = character exponent k");
    gauss_cmd->add_option("--prime", gauss_p)->required();
    gauss_cmd->add_option("--char", gauss_k, "Exponent k against the smallest primitive root")->required();

    // jacobi
    std::uint32_t jac_p = 0, jac_k1 = 0, jac_k2 = 0;
    auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi sum J(chi1, chi2)");
    jacobi_cmd->add_option("--prime", jac_p)->required();
    jacobi_cmd->add_option("--char1", jac_k1)->required();
    jacobi_cmd->add_option("--char2", jac_k2)->required();

    // ghyp
    std::uint32_t ghyp_p = 0;
    std::int64_t ghyp_x = 0;
    bool ghyp_phieps = false;
    std::string ghyp_upper, ghyp_lower;
    auto* ghyp_cmd = app.add_subcommand(
        "ghyp", "Gaussian hypergeometric series over F_p at x (character exponents)");
    ghyp_cmd->add_option("--prime", ghyp_p)->required();
    ghyp_cmd->add_option("--x", ghyp_x)->required();
    ghyp_cmd->add_flag("--phi-eps", ghyp_phieps,
                       "The 3F2(phi,phi,phi; eps,eps | x)_p shortcut; prints the snapped rational");
    ghyp_cmd->add_option("--upper", ghyp_upper, "Upper character exponents, comma-separated");
    ghyp_cmd->add_option("--lower", ghyp_lower, "Lower character exponents, comma-separated");

    // jacobsthal
    std::uint32_t jt_p = 0;
    auto* jt_cmd = app.add_subcommand("jacobsthal", "sum_x phi(x^3+1) over F_p, p > 3");
    jt_cmd->add_option("--prime", jt_p)->required();

    // represent
    std::uint32_t rep_p = 0;
    auto* rep_cmd =
        app.add_subcommand("represent", "p = a^2 + 3b^2 with a = -1 mod 3, for p = 1 mod 3");
    rep_cmd->add_option("--prime", rep_p)->required();

    // verify
    std::string verify_suite = "all", verify_format = "human", verify_out;
    std::uint32_t verify_primes_max = 0;
    std::uint64_t verify_seed = 0;
    bool have_seed = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("suite", verify_suite, "Suite name or 'all'");
    verify_cmd->add_option("--primes-max", verify_primes_max,
                           "Cap every prime grid at this bound (default grids otherwise)");
    verify_cmd->add_option("--format", verify_format, "human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    verify_cmd->add_option("--seed", verify_seed, "Seed for random transformation instances")
        ->each([&](const std::string&) { have_seed = true; });
    verify_cmd->add_option("--out", verify_out, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; any parse error is a usage error
    }

    try {
        if (hyp->parsed()) {
            sf::HypergeometricSpec spec{parse_rational_list(hyp_upper),
                                        parse_rational_list(hyp_lower), hyp_z};
            sf::EvalOptions opts;
            opts.relative_tolerance = hyp_tol;
            auto res = sf::pfq(spec, opts);
            std::cout << fmt_real(res.value) << "\n";
        } else if (agm_cmd->parsed()) {
            std::cout << fmt_real(sf::agm(agm_a, agm_b, agm_tol)) << "\n";
        } else if (gamma_cmd->parsed()) {
            std::cout << fmt_real(sf::gamma_real(gamma_x)) << "\n";
        } else if (binom_cmd->parsed()) {
            std::cout << fmt_real(sf::rational_binomial(parse_rational(binom_n),
                                                        parse_rational(binom_k)))
                      << "\n";
        } else if (period_cmd->parsed()) {
            const double lambda = parse_real(period_lambda);
            const auto result = period_method == "agm" ? ec::real_period_agm(lambda)
                                                       : ec::real_period_2f1(lambda);
            std::cout << fmt_real(result.omega) << "\n";
        } else if (trace_cmd->parsed()) {
            if (trace_lam_opt->count() == 0 && trace_curve_opt->count() == 0)
                throw std::invalid_argument("trace: need --lambda or --curve");
            const ff::PrimeContext ctx = ff::make_prime_context(trace_p);
            ec::WeierstrassCurve curve;
            if (trace_lam_opt->count() > 0) {
                curve = ec::lambda_curve(parse_rational(trace_lambda));
            } else {
                auto a = parse_rational_list(trace_curve);
                if (a.size() != 5)
                    throw std::invalid_argument("trace: --curve needs a1,a2,a3,a4,a6");
                curve = ec::WeierstrassCurve{a[0], a[1], a[2], a[3], a[4]};
            }
            if (!ff::good_reduction(curve, trace_p))
                throw std::invalid_argument("trace: bad reduction at p");
            std::cout << ff::trace_frobenius(ctx, curve) << "\n";
        } else if (gauss_cmd->parsed()) {
            const ff::PrimeContext ctx = ff::make_prime_context(gauss_p);
            std::cout << fmt_complex(ff::gauss_sum(ctx.character(gauss_k))) << "\n";
        } else if (jacobi_cmd->parsed()) {
            const ff::PrimeContext ctx = ff::make_prime_context(jac_p);
            std::cout << fmt_complex(ff::jacobi_sum(ctx.character(jac_k1), ctx.character(jac_k2)))
                      << "\n";
        } else if (ghyp_cmd->parsed()) {
            const ff::PrimeContext ctx = ff::make_prime_context(ghyp_p);
            if (ghyp_phieps) {
                const auto value = ff::quadratic_3f2(ctx, ghyp_x);
                const auto snapped =
                    ff::snap_to_rational(value, BigInt(ghyp_p) * ghyp_p, 1e-6 * ghyp_p);
                std::cout << to_string(snapped.value) << "\n";
            } else {
                if (ghyp_upper.empty() || ghyp_lower.empty())
                    throw std::invalid_argument("ghyp: need --phi-eps or both --upper and --lower");
                const auto upper = parse_character_list(ctx, ghyp_upper);
                const auto lower = parse_character_list(ctx, ghyp_lower);
                std::cout << fmt_complex(ff::gaussian_hyp(upper, lower, ghyp_x)) << "\n";
            }
        } else if (jt_cmd->parsed()) {
            const ff::PrimeContext ctx = ff::make_prime_context(jt_p);
            std::cout << ff::jacobsthal_phi_cubic(ctx) << "\n";
        } else if (rep_cmd->parsed()) {
            if (!ff::is_odd_prime(rep_p))
                throw std::invalid_argument("represent: p must be an odd prime");
            auto [a, b] = ff::represent_a2_3b2(rep_p);
            std::cout << "a=" << a << " b=" << b << "\n";
        } else if (verify_cmd->parsed()) {
            verify::Config cfg;
            if (verify_primes_max > 0) {
                cfg.ono_primes_max = verify_primes_max;
                cfg.binomial_primes_max = verify_primes_max;
                cfg.jacobsthal_primes_max = verify_primes_max;
                cfg.twist_primes_max = verify_primes_max;
            }
            if (have_seed) cfg.seed = verify_seed;

            std::vector<verify::SuiteReport> reports;
            if (verify_suite == "all") {
                reports = verify::run_all(cfg);
            } else {
                reports.push_back(verify::run_suite(verify_suite, cfg));
            }

            std::string text;
            if (verify_format == "json") text = report::to_json(reports);
            else if (verify_format == "csv") text = report::to_csv(reports);
            else text = report::to_human(reports);
            emit(text, verify_out);

            for (const auto& r : reports)
                if (!r.all_passed()) return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
