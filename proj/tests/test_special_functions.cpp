#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperell/special_functions.hpp"

using namespace hyperell;
using doctest::Approx;

namespace {

// Deterministic uniform draw, independent of library distribution internals.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

} // namespace

// Reference values below were frozen from 50-digit arbitrary-precision runs
// of independent implementations of the same quantities.

TEST_CASE("pfq reproduces frozen high-precision values") {
    CHECK(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, 0.5)).value ==
          Approx(1.18034059901609622).epsilon(1e-12));
    CHECK(sf::pfq(sf::make_3f2({1, 2}, {1, 2}, {1, 2}, 1, 1, 0.25)).value ==
          Approx(1.03512066142564898).epsilon(1e-12));
    CHECK(sf::pfq(sf::make_2f1({1, 4}, {1, 4}, 1, 0.25)).value ==
          Approx(1.01740879759595601).epsilon(1e-12));
    CHECK(sf::pfq(sf::make_2f1({1, 4}, {3, 4}, 1, -1.0 / 3.0)).value ==
          Approx(0.946805570736021211).epsilon(1e-12));
}

TEST_CASE("pfq at z = 0 is exactly 1") {
    auto r = sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, 0.0));
    CHECK(r.value == 1.0);
    CHECK(r.converged);
}

TEST_CASE("terminating series stops on the zero term") {
    // 2F1(-3, 2; 4 | 1/2): upper parameter -3 terminates the sum after n = 3;
    // the exact value is 1 - 3/4 + 9/40 - 1/40 = 9/20.
    auto r = sf::pfq(sf::make_2f1(-3, 2, 4, 0.5));
    CHECK(r.converged);
    CHECK(r.terms_used <= 5);
    CHECK(r.value == Approx(0.45).epsilon(1e-14));
}

TEST_CASE("pfq term recurrence matches from-scratch Pochhammer terms") {
    // Rebuild each term as prod (a)_n z^n / ((b)_n n!) in exact rationals
    // and sum; the recurrence path must agree to rounding noise.
    const std::vector<Rational> upper = {{1, 2}, {1, 3}};
    const std::vector<Rational> lower = {{5, 4}};
    const Rational z(3, 10);
    Rational sum = 0, term = 1;
    for (int n = 0; n < 60; ++n) {
        sum += term;
        Rational ratio = z / (n + 1);
        for (const auto& a : upper) ratio *= a + n;
        for (const auto& b : lower) ratio /= b + n;
        term *= ratio;
    }
    const double direct = sf::pfq(sf::HypergeometricSpec{upper, lower, 0.3}).value;
    CHECK(direct == Approx(to_double(sum)).epsilon(1e-13));
}

TEST_CASE("pfq divergence and domain rules") {
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, 1.5)), std::invalid_argument);
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, -1.25)), std::invalid_argument);
    // |z| = 1 needs positive parameter excess, decided exactly
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1(1, 1, 2, -1.0)), std::invalid_argument);
    // lower parameter at a pole
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, -2, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 0, 0.5)), std::invalid_argument);
    // 3F1-shaped input only makes sense at z = 0
    sf::HypergeometricSpec bad{{1, 1, 1}, {2}, 0.5};
    CHECK_THROWS_AS(sf::pfq(bad), std::invalid_argument);
    // options validation
    sf::EvalOptions opts;
    opts.relative_tolerance = 0.0;
    CHECK_THROWS_AS(sf::pfq(sf::make_2f1(1, 1, 2, 0.5), opts), std::invalid_argument);
}

TEST_CASE("pfq accepts |z| = 1 with positive excess and reports slow convergence honestly") {
    // 2F1(1/2,1/2;2;1) = Gamma(2)Gamma(1)/Gamma(3/2)^2 = 4/pi; terms decay
    // like n^{-2}, far too slow for full precision within the term budget.
    sf::EvalOptions opts;
    opts.max_terms = 2000;
    auto r = sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 2, 1.0), opts);
    CHECK_FALSE(r.converged);
    CHECK(r.value == Approx(4.0 / std::numbers::pi).epsilon(1e-2));
}

TEST_CASE("pfq agrees with the quadrature oracle on random admissible 2F1 instances") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 50; ++i) {
        const double a = uniform(rng, 0.1, 2.0);
        const double b = uniform(rng, 0.1, 2.0);
        const double c = b + uniform(rng, 0.1, 2.0);
        const double z = uniform(rng, 0.0, 0.9);
        const double integral = sf::gauss_2f1_integral(a, b, c, z);
        // series wants exact rational parameters; snap the draws to /1024
        const auto q = [](double x) {
            return Rational(static_cast<long long>(std::llround(x * 1024)), 1024);
        };
        const double series =
            sf::pfq(sf::make_2f1(q(a), q(b), q(c), z)).value;
        const double integral_q = sf::gauss_2f1_integral(to_double(q(a)), to_double(q(b)),
                                                         to_double(q(c)), z);
        CHECK(std::abs(series - integral_q) <= 1e-7 * std::max(1.0, std::abs(integral_q)));
        CHECK(std::isfinite(integral));
    }
}

TEST_CASE("gauss_2f1_integral domain checks") {
    CHECK_THROWS_AS(sf::gauss_2f1_integral(0.5, 0.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(sf::gauss_2f1_integral(0.5, 2.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(sf::gauss_2f1_integral(0.5, 0.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gamma_real frozen values and special points") {
    CHECK(sf::gamma_real(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(sf::gamma_real(1.0) == Approx(1.0).epsilon(1e-14));
    CHECK(sf::gamma_real(4.0) == Approx(6.0).epsilon(1e-14));
    CHECK(sf::gamma_real(1.0 / 3.0) == Approx(2.67893853470774763).epsilon(1e-13));
    CHECK(sf::gamma_real(5.0 / 6.0) == Approx(1.12878702990812596).epsilon(1e-13));
    // reflection side
    CHECK(sf::gamma_real(-0.5) == Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("gamma_real satisfies the recurrence G(x+1) = x G(x)") {
    for (double x = 0.1; x <= 5.05; x += 0.1) {
        CHECK(sf::gamma_real(x + 1.0) == Approx(x * sf::gamma_real(x)).epsilon(1e-12));
    }
}

TEST_CASE("gamma_real agrees with the C library gamma") {
    for (double x : {0.17, 0.5, 1.31, 2.75, 3.5, 7.25, 11.0, -0.5, -1.5, -2.25, -6.75}) {
        CHECK(sf::gamma_real(x) == Approx(std::tgamma(x)).epsilon(1e-10));
    }
}

TEST_CASE("gamma_real rejects poles") {
    CHECK_THROWS_AS(sf::gamma_real(0.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::gamma_real(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::gamma_real(-7.0), std::invalid_argument);
}

TEST_CASE("rational_binomial values") {
    CHECK(sf::rational_binomial({1, 3}, {1, 2}) == Approx(0.892656852710186659).epsilon(1e-13));
    CHECK(sf::rational_binomial(4, 2) == Approx(6.0).epsilon(1e-13));
    CHECK(sf::rational_binomial(5, 0) == Approx(1.0).epsilon(1e-13));
    CHECK(sf::rational_binomial({7, 2}, {1, 2}) ==
          Approx(sf::gamma_real(4.5) / (sf::gamma_real(1.5) * sf::gamma_real(4.0)))
              .epsilon(1e-13));
}

TEST_CASE("rational_binomial rejects gamma poles") {
    CHECK_THROWS_AS(sf::rational_binomial(-1, {1, 2}), std::invalid_argument);   // n+1 = 0
    CHECK_THROWS_AS(sf::rational_binomial({1, 2}, -3), std::invalid_argument);   // k+1 < 0
    CHECK_THROWS_AS(sf::rational_binomial(2, 4), std::invalid_argument);         // n-k+1 < 0
}

TEST_CASE("agm frozen value and algebraic properties") {
    CHECK(sf::agm(1.0, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(sf::agm(1.0, std::sqrt(2.0)) == Approx(1.19814023473559220).epsilon(1e-14));
    // symmetry, homogeneity, betweenness
    CHECK(sf::agm(0.7, 2.9) == Approx(sf::agm(2.9, 0.7)).epsilon(1e-15));
    CHECK(sf::agm(3.0 * 0.8, 3.0 * 1.7) == Approx(3.0 * sf::agm(0.8, 1.7)).epsilon(1e-14));
    const double m = sf::agm(0.4, 1.9);
    CHECK(m > 0.4);
    CHECK(m < 1.9);
}

TEST_CASE("agm matches the classical 2F1 connection") {
    // 1/AGM(1, beta) = 2F1(1/2,1/2;1 | 1 - beta^2); keep beta away from 0 so
    // the series argument stays within comfortable range.
    for (double beta : {0.35, 0.5, 0.75, 0.9, 1.0}) {
        const double lhs = 1.0 / sf::agm(1.0, beta);
        const double z = 1.0 - beta * beta;
        const double rhs = sf::pfq(sf::make_2f1({1, 2}, {1, 2}, 1, z)).value;
        CHECK(lhs == Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("agm rejects non-positive input") {
    CHECK_THROWS_AS(sf::agm(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::agm(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(sf::agm(1.0, 1.0, 0.0), std::invalid_argument);
}
