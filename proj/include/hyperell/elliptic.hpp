#pragma once

#include <cstdint>

#include "hyperell/rational.hpp"

namespace hyperell::ec {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, coefficients exact.
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return 2 * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
};

// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6, exact.
Rational discriminant(const WeierstrassCurve& curve);

// The curve y^2 = (x-1)(x^2 + lambda), expanded to Weierstrass form
// y^2 = x^3 - x^2 + lambda x - lambda. lambda in {0, -1} is singular and
// throws.
WeierstrassCurve lambda_curve(const Rational& lambda);

// t-quadratic twist of y^2 = x^3 + a x^2 + b x + c:
// y^2 = x^3 + a t x^2 + b t^2 x + c t^3. Requires a1 = a3 = 0 and t a
// nonzero square-free integer.
WeierstrassCurve quadratic_twist(const WeierstrassCurve& curve, std::int64_t t);

bool is_square_free(std::int64_t t);

enum class PeriodMethod { agm, hypergeometric };

struct PeriodResult {
    double omega = 0.0;
    PeriodMethod method = PeriodMethod::agm;
};

// Real period of E_lambda for lambda > 0 (one real root of the cubic, which
// we assert through the sign of the discriminant):
//
//   Omega = 2 pi / AGM(2 sqrt(b), sqrt(2b + a)),  a = 2, b = sqrt(1 + lambda).
//
// The y -> y/2 normalization from y^2 = (x-1)(x^2+lambda) to the 4(x-1)(...)
// form required by that mean is already folded in.
PeriodResult real_period_agm(double lambda, double tol = 1e-15);

// Same period through the series route:
//
//   Omega = (1+lambda)^{-1/4} pi 2F1(1/4, 1/4; 1; lambda/(1+lambda)),
//
// valid here for 0 < lambda <= 9 so the series argument stays <= 0.9.
PeriodResult real_period_2f1(double lambda);

} // namespace hyperell::ec
