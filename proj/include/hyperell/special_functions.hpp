#pragma once

#include <cstddef>
#include <vector>

#include "hyperell/rational.hpp"

namespace hyperell::sf {

// A classical pFq instance: upper parameters a_1..a_p, lower parameters
// b_1..b_q (none of which may be zero or a negative integer) and a real
// argument z. Parameters are kept as exact rationals; they are rounded to
// double exactly once, when the series is summed.
struct HypergeometricSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    double argument = 0.0;
};

struct EvalOptions {
    double relative_tolerance = 1e-12;
    std::size_t max_terms = 200000;
};

struct EvalResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
    double last_term_magnitude = 0.0;
};

// Sum of prod_i (a_i)_n / prod_j (b_j)_n * z^n / n! over n >= 0, by the term
// ratio recurrence
//
//   term_{n+1} = term_n * prod_i (a_i + n) / prod_j (b_j + n) * z / (n + 1).
//
// Summation stops once two consecutive terms both fall below
// relative_tolerance * |partial sum| (a single small term can be an accident
// of an alternating parameter), or exactly when a term vanishes (terminating
// series). If max_terms is exhausted first, the best partial sum comes back
// with converged = false.
//
// Convergence domain for p = q+1 is |z| < 1, extended to |z| = 1 when
// sum(lower) - sum(upper) > 0; anything outside throws std::invalid_argument,
// as does a lower parameter at a pole.
EvalResult pfq(const HypergeometricSpec& spec, const EvalOptions& opts = {});

// Convenience builders for the two shapes used throughout.
HypergeometricSpec make_2f1(const Rational& a, const Rational& b, const Rational& c, double z);
HypergeometricSpec make_3f2(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, double z);

// Euler-type integral for 2F1, used as the quadrature oracle against the
// series path:
//
//   2F1(a,b;c;z) = 2 G(c)/(G(b) G(c-b)) *
//                  int_0^{pi/2} sin(t)^{2b-1} cos(t)^{2c-2b-1} (1-z sin^2 t)^{-a} dt
//
// for c > b > 0 and z < 1. Adaptive Gauss-Kronrod (open rules, so the
// integrable endpoint singularities for exponents in (-1,0) are never
// sampled) to ~1e-10 absolute.
double gauss_2f1_integral(double a, double b, double c, double z);

// Real gamma function: Lanczos rational approximation (g = 7, 9 terms)
// plus the reflection formula for x < 0.5. Relative accuracy ~1e-13 over
// (0, 172); poles at non-positive integers throw.
double gamma_real(double x);

// Binomial coefficient extended to rational arguments:
// G(n+1) / (G(k+1) G(n-k+1)). A pole in any factor throws.
double rational_binomial(const Rational& n, const Rational& k);

// Arithmetic-geometric mean of alpha, beta > 0: iterate the arithmetic and
// geometric means until |alpha_n - beta_n| <= tol * alpha_n, return the
// midpoint of the final pair. Quadratic convergence; a handful of iterations
// at tol = 1e-15.
double agm(double alpha, double beta, double tol = 1e-15);

} // namespace hyperell::sf
