#pragma once

// Multiplicative characters of F_p and the character sums built from them.
//
// Conventions, fixed once here and relied on everywhere:
//   * a character is its exponent k mod p-1 against the smallest primitive
//     root g, i.e. chi(g^m) = e^{2 pi i k m/(p-1)}; conjugation is exponent
//     negation, multiplication is exponent addition
//   * every character, the trivial one included, takes the value 0 at 0
//   * G(chi)    = sum_x chi(x) e^{2 pi i x/p}
//   * J(chi,lm) = sum_x chi(x) lm(1-x)
//   * binom(A,B) = B(-1)/p * J(A, conj(B))
//   * (n+1)Fn(A0..An; B1..Bn | x)_p
//       = p/(p-1) * sum_chi binom(A0 chi, chi) prod_i binom(Ai chi, Bi chi) chi(x)
//
// Sums are accumulated in complex doubles and, where a value is known to be
// rational, snapped to an exact rational with a loud failure if the float is
// not actually near one.

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyperell/elliptic.hpp"
#include "hyperell/rational.hpp"

namespace hyperell::ff {

class Character;

// Deterministic Miller-Rabin, exact for any 32-bit input.
bool is_odd_prime(std::uint32_t n);

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi);

// One odd prime p with its smallest primitive root, a full discrete-log
// table, and the root-of-unity tables every character sum reads from.
// Immutable after construction; O(p) memory. Characters hold a pointer to
// their context, so keep it alive (and in place) while they are in use.
class PrimeContext {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t generator() const { return generator_; }

    // x in 1..p-1
    std::uint32_t dlog(std::uint32_t x) const { return dlog_[x]; }

    Character character(std::uint32_t exponent) const;
    Character trivial() const;
    Character quadratic() const;  // exponent (p-1)/2
    // An order-3 character, exponent (p-1)/3, when 3 | p-1; the trivial
    // character otherwise (no order-3 character exists for p = 2 mod 3).
    Character cubic() const;

    // Quadratic character as an exact integer in {-1, 0, 1}.
    int legendre(std::int64_t x) const;

    std::complex<double> mul_root(std::uint64_t k) const { return mul_roots_[k % (p_ - 1)]; }
    std::complex<double> add_root(std::uint32_t x) const { return add_roots_[x % p_]; }

    friend PrimeContext make_prime_context(std::uint32_t p);

private:
    PrimeContext() = default;

    std::uint32_t p_ = 0;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> dlog_;
    std::vector<std::complex<double>> mul_roots_;  // e^{2 pi i k/(p-1)}
    std::vector<std::complex<double>> add_roots_;  // e^{2 pi i x/p}
};

// Throws std::invalid_argument unless p is an odd prime.
PrimeContext make_prime_context(std::uint32_t p);

class Character {
public:
    Character(const PrimeContext& ctx, std::uint32_t exponent)
        : ctx_(&ctx), exponent_(exponent % (ctx.p() - 1)) {}

    const PrimeContext& context() const { return *ctx_; }
    std::uint32_t exponent() const { return exponent_; }
    std::uint32_t order() const;
    bool is_trivial() const { return exponent_ == 0; }

    Character conj() const;
    Character operator*(const Character& other) const;  // same context required

    // chi(x); x is reduced mod p, chi(0) = 0.
    std::complex<double> operator()(std::int64_t x) const;

private:
    const PrimeContext* ctx_;
    std::uint32_t exponent_;
};

std::complex<double> gauss_sum(const Character& chi);

std::complex<double> jacobi_sum(const Character& chi, const Character& lambda);

// binom(A,B) = B(-1)/p * J(A, conj(B))
std::complex<double> ff_binomial(const Character& a, const Character& b);

// Greene's hypergeometric sum over F_p with the per-character coefficients
// precomputed, so one series costs O(n p^2) to set up and each argument
// O(p) to evaluate. upper has n+1 characters, lower has n, all from one
// context.
class GaussianHypergeometric {
public:
    GaussianHypergeometric(std::vector<Character> upper, std::vector<Character> lower);

    std::complex<double> operator()(std::int64_t x) const;

    const PrimeContext& context() const { return *ctx_; }

private:
    const PrimeContext* ctx_;
    std::vector<std::complex<double>> coeff_;  // indexed by the summation character's exponent
};

// One-shot evaluation of the sum above.
std::complex<double> gaussian_hyp(const std::vector<Character>& upper,
                                  const std::vector<Character>& lower, std::int64_t x);

// The all-quadratic-character series 3F2(phi,phi,phi; eps,eps | x)_p.
GaussianHypergeometric make_quadratic_3f2(const PrimeContext& ctx);
std::complex<double> quadratic_3f2(const PrimeContext& ctx, std::int64_t x);

struct SnappedRational {
    Rational value;
    double residual = 0.0;  // |float - value| in the complex plane
};

// Nearest num/denominator to v. Throws if |Im v| > tol or if the snap
// residual exceeds tol: either means the character sum is not the rational
// it was claimed to be.
SnappedRational snap_to_rational(std::complex<double> v, const BigInt& denominator, double tol);

// A cubic c[0] + c[1] x + c[2] x^2 + c[3] x^3 with coefficients taken mod p.
using Cubic = std::array<std::int64_t, 4>;

// disc of the cubic mod p (18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2
// - 4 c3 c1^3 - 27 c3^2 c0^2).
std::uint32_t cubic_discriminant_mod_p(const PrimeContext& ctx, const Cubic& f);

// a_p = - sum_x phi(f(x)) for y^2 = f(x); requires nonsingular reduction
// (cubic leading coefficient and discriminant nonzero mod p).
std::int64_t trace_frobenius(const PrimeContext& ctx, const Cubic& f);

// Exhaustive point count of y^2 = f(x) including the point at infinity;
// scans all (x, y) pairs on purpose, as the independent check on
// trace_frobenius via a_p = 1 + p - N_p.
std::int64_t count_points(const PrimeContext& ctx, const Cubic& f);

// Reduce a curve with a1 = a3 = 0 (or complete the square when not, p odd)
// to y^2 = cubic mod p. Throws if any coefficient has p in its denominator.
Cubic reduce_to_cubic(const PrimeContext& ctx, const ec::WeierstrassCurve& curve);

std::int64_t trace_frobenius(const PrimeContext& ctx, const ec::WeierstrassCurve& curve);
std::int64_t count_points(const PrimeContext& ctx, const ec::WeierstrassCurve& curve);

// sum_x phi(x^3 + 1), an integer; p > 3.
std::int64_t jacobsthal_phi_cubic(const PrimeContext& ctx);

// The unique (a, b) with p = a^2 + 3 b^2, b >= 0 and a = -1 mod 3, for
// p = 1 mod 3. Exhaustive search; more than one (|a|, b) pair would be a
// logic error and throws as such.
std::pair<std::int64_t, std::int64_t> represent_a2_3b2(std::uint32_t p);

// ord_p(disc) == 0. Requires a nonzero discriminant and p-integral
// coefficients.
bool good_reduction(const ec::WeierstrassCurve& curve, std::uint32_t p);

// ord_p(lambda (lambda+1)) == 0 for lambda = r/s in lowest terms, i.e.
// p divides none of r, s, r+s.
bool ono_condition(const Rational& lambda, std::uint32_t p);

// r/s mod p; throws if p | s.
std::int64_t reduce_mod(const Rational& q, std::uint32_t p);

} // namespace hyperell::ff
