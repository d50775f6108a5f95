#pragma once

// Verification suites: every identity the library claims to embody, run over
// parameter grids and reported as structured pass/fail results.
//
// Real-analytic identities (two independent floating chains) compare with a
// relative tolerance. Finite-field identities are identities of algebraic
// numbers: the floating character sums are snapped to exact rationals and
// compared exactly, so a failure is loud rather than fuzzy.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperell/rational.hpp"

namespace hyperell::verify {

struct CheckResult {
    std::string name;
    std::map<std::string, std::string> params;  // ordered -> deterministic output
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    bool passed = false;
    double elapsed_s = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;
    int passed = 0;
    int failed = 0;

    void add(CheckResult r);
    bool all_passed() const { return failed == 0; }
};

struct Config {
    std::vector<double> lambda_grid = {0.1, 0.25, 1.0 / 3.0, 0.5, 1.0, 2.0, 3.0, 5.0, 9.0};
    std::vector<Rational> ono_lambdas = {Rational(1, 3), Rational(1, 2), Rational(2), Rational(3)};
    std::vector<double> z_grid = {0.0, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9};
    std::vector<std::uint32_t> inversion_primes = {5, 7, 11, 13, 17, 19, 23};
    std::uint32_t ono_primes_max = 199;
    std::uint32_t binomial_primes_max = 499;
    std::uint32_t jacobsthal_primes_max = 499;
    std::uint32_t twist_primes_max = 101;
    double period_tol = 1e-8;      // relative
    double corollary_tol = 1e-9;   // relative
    double transform_tol = 1e-9;   // relative
    std::uint64_t seed = 20260823;
};

// 3F2(1/2,1/2,1/2; 1,1 | lambda/(1+lambda)) = sqrt(1+lambda) Omega(E_lambda)^2 / pi^2,
// series against the AGM period.
SuiteReport verify_theorem_period(const std::vector<double>& lambdas, double tol);

// The lambda = 1/3 closed forms:
//   2 sqrt(2)/(3 pi) * Omega(E_{1/3}) = binom(1/3, 1/2)
//   sqrt(2) * Omega(E_{1/3})          = Gamma(1/3) Gamma(1/2) / Gamma(5/6)
// plus the algebraic consistency rhs2/rhs1 = 3 pi / 2.
SuiteReport verify_corollary(double tol);

// 3F2((1+lambda)/lambda)_p = phi_p(-lambda) (a_p^2 - p)/p^2 and the
// transformed variant 3F2(lambda/(1+lambda))_p = phi_p(1+lambda) (a_p^2 - p)/p^2,
// exact as rationals after snapping to denominator p^2. Primes failing
// ono_condition are recorded as skipped.
SuiteReport verify_ono(const Rational& lambda, const std::vector<std::uint32_t>& primes);

// 3F2(1/t)_p = phi_p(-t) 3F2(t)_p for every t in F_p*.
SuiteReport verify_greene_inversion(std::uint32_t p, double tol_scale = 1e-6);

// -phi_p(-2)/p * a_p(E_{1/3}) = 2 Re binom(chi3, phi_p)   (snap to denominator p)
// -phi_p(2) * a_p(E_{1/3})    = 2 Re[G(chi3) G(phi_p) / G(chi3 phi_p)]  (snap to integer)
// For p = 2 mod 3 no order-3 character exists; the sums are taken with the
// constant-one function in place of chi3 (summed over all of F_p, 0
// included), which makes both sides vanish along with a_p.
SuiteReport verify_theorem_binomial(const std::vector<std::uint32_t>& primes);

// The three classical transformations at the parameter instances the
// identities above lean on, plus 20 seeded random admissible instances:
//   quadratic: 2F1(a,b; a+b+1/2 | z) = 2F1(2a,2b; a+b+1/2 | 1/2 - sqrt(1-z)/2)
//   square:    3F2(1/2,1/2,1/2; 1,1 | z) = [2F1(1/4,1/4; 1 | z)]^2
//   pfaff:     2F1(a,b; c | z) = (1-z)^{-a} 2F1(a,c-b; c | z/(z-1))
// The pfaff argument is halved (z <= 0.45) so the mapped argument stays
// inside the unit disc.
SuiteReport verify_transformations(const std::vector<double>& zs, double tol, std::uint64_t seed);

// a_p(E) = phi_p(t) a_p(E_t) for y^2 = x^3 + 1 and t in {-6, -2, 5}.
SuiteReport verify_twist_relation(const std::vector<std::uint32_t>& primes);

// sum_x phi(x^3+1) = 2a for p = 1 mod 3 (p = a^2 + 3b^2, a = -1 mod 3),
// and = 0 for p = 2 mod 3.
SuiteReport verify_jacobsthal(const std::vector<std::uint32_t>& primes);

// Grid-level wrappers used by run_all and the CLI; names:
// period, corollary, ono, inversion, binomial, transformations, twist, jacobsthal.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const Config& cfg = {});
std::vector<SuiteReport> run_all(const Config& cfg = {});

} // namespace hyperell::verify
