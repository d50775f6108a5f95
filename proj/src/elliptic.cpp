#include "hyperell/elliptic.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperell/special_functions.hpp"

namespace hyperell::ec {

Rational discriminant(const WeierstrassCurve& c) {
    const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

WeierstrassCurve lambda_curve(const Rational& lambda) {
    if (lambda == 0 || lambda == -1) {
        throw std::invalid_argument("lambda_curve: lambda = " + hyperell::to_string(lambda) +
                                    " gives a singular curve");
    }
    return WeierstrassCurve{0, -1, 0, lambda, -lambda};
}

bool is_square_free(std::int64_t t) {
    if (t == 0) return false;
    if (t < 0) t = -t;
    for (std::int64_t d = 2; d * d <= t; ++d) {
        if (t % (d * d) == 0) return false;
    }
    return true;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& curve, std::int64_t t) {
    if (curve.a1 != 0 || curve.a3 != 0) {
        throw std::invalid_argument("quadratic_twist: curve must have a1 = a3 = 0");
    }
    if (!is_square_free(t)) {
        throw std::invalid_argument("quadratic_twist: t must be a nonzero square-free integer");
    }
    const Rational tw{t};
    return WeierstrassCurve{0, curve.a2 * tw, 0, curve.a4 * tw * tw, curve.a6 * tw * tw * tw};
}

PeriodResult real_period_agm(double lambda, double tol) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("real_period_agm: requires lambda > 0");
    }
    // One real root <=> disc of the cubic < 0; for this family
    // disc(E_lambda) = -64 lambda (lambda+1)^2 which is < 0 for all
    // lambda > 0. Checked here so a future family change fails loudly.
    if (!(-64.0 * lambda * (lambda + 1.0) * (lambda + 1.0) < 0.0)) {
        throw std::logic_error("real_period_agm: cubic does not have exactly one real root");
    }
    const double a = 2.0;
    const double b = std::sqrt(1.0 + lambda);
    const double mean = sf::agm(2.0 * std::sqrt(b), std::sqrt(2.0 * b + a), tol);
    return PeriodResult{2.0 * M_PI / mean, PeriodMethod::agm};
}

PeriodResult real_period_2f1(double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("real_period_2f1: requires lambda > 0");
    }
    const double z = lambda / (1.0 + lambda);
    if (z > 0.9) {
        throw std::invalid_argument(
            "real_period_2f1: series argument lambda/(1+lambda) > 0.9 (lambda capped at 9)");
    }
    const Rational quarter{1, 4};
    const auto eval = sf::pfq(sf::make_2f1(quarter, quarter, 1, z));
    const double omega = std::pow(1.0 + lambda, -0.25) * M_PI * eval.value;
    return PeriodResult{omega, PeriodMethod::hypergeometric};
}

} // namespace hyperell::ec
