#include "hyperell/finite_field.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperell::ff {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a proves n composite
}

// value mod p in [0, p)
std::int64_t mod_i64(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

std::int64_t mod_big(const BigInt& value, std::uint32_t p) {
    BigInt r = value % p;
    auto v = static_cast<std::int64_t>(r);
    return v < 0 ? v + p : v;
}

std::array<std::uint64_t, 4> reduce_cubic_coeffs(std::uint32_t p, const Cubic& f) {
    std::array<std::uint64_t, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = static_cast<std::uint64_t>(mod_i64(f[i], p));
    return c;
}

std::uint64_t eval_cubic(const std::array<std::uint64_t, 4>& c, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = c[3];
    acc = (mulmod(acc, x, p) + c[2]) % p;
    acc = (mulmod(acc, x, p) + c[1]) % p;
    acc = (mulmod(acc, x, p) + c[0]) % p;
    return acc;
}

} // namespace

bool is_odd_prime(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    // Bases 2, 7, 61 are a deterministic witness set below 4.7e9.
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    if (lo <= 2 && 2 <= hi) out.push_back(2);
    for (std::uint32_t n = std::max(lo, 3u); n <= hi; ++n)
        if (is_odd_prime(n)) out.push_back(n);
    return out;
}

PrimeContext make_prime_context(std::uint32_t p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("make_prime_context: " + std::to_string(p) + " is not an odd prime");

    PrimeContext ctx;
    ctx.p_ = p;

    // Smallest primitive root: g with g^((p-1)/q) != 1 for every prime q | p-1.
    std::uint32_t m = p - 1;
    std::vector<std::uint32_t> factors;
    {
        std::uint32_t n = m;
        for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= n; ++q) {
            if (n % q == 0) {
                factors.push_back(q);
                while (n % q == 0) n /= q;
            }
        }
        if (n > 1) factors.push_back(n);
    }
    for (std::uint32_t g = 2;; ++g) {
        bool primitive = true;
        for (std::uint32_t q : factors) {
            if (powmod(g, m / q, p) == 1) { primitive = false; break; }
        }
        if (primitive) { ctx.generator_ = g; break; }
    }

    ctx.dlog_.assign(p, 0);
    std::uint64_t val = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
        ctx.dlog_[val] = k;
        val = val * ctx.generator_ % p;
    }

    ctx.mul_roots_.resize(m);
    for (std::uint32_t k = 0; k < m; ++k)
        ctx.mul_roots_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    ctx.add_roots_.resize(p);
    for (std::uint32_t x = 0; x < p; ++x)
        ctx.add_roots_[x] = std::polar(1.0, 2.0 * std::numbers::pi * x / p);

    return ctx;
}

Character PrimeContext::character(std::uint32_t exponent) const {
    return Character(*this, exponent);
}

Character PrimeContext::trivial() const { return Character(*this, 0); }

Character PrimeContext::quadratic() const { return Character(*this, (p_ - 1) / 2); }

Character PrimeContext::cubic() const {
    return (p_ - 1) % 3 == 0 ? Character(*this, (p_ - 1) / 3) : trivial();
}

int PrimeContext::legendre(std::int64_t x) const {
    std::int64_t r = mod_i64(x, p_);
    if (r == 0) return 0;
    return dlog_[r] % 2 == 0 ? 1 : -1;
}

std::uint32_t Character::order() const {
    std::uint32_t m = ctx_->p() - 1;
    return m / std::gcd(exponent_, m);
}

Character Character::conj() const {
    std::uint32_t m = ctx_->p() - 1;
    return Character(*ctx_, (m - exponent_) % m);
}

Character Character::operator*(const Character& other) const {
    if (ctx_ != other.ctx_)
        throw std::invalid_argument("Character: mixed prime contexts");
    return Character(*ctx_, exponent_ + other.exponent_);
}

std::complex<double> Character::operator()(std::int64_t x) const {
    std::int64_t r = mod_i64(x, ctx_->p());
    if (r == 0) return 0.0;
    return ctx_->mul_root(static_cast<std::uint64_t>(exponent_) * ctx_->dlog(static_cast<std::uint32_t>(r)));
}

std::complex<double> gauss_sum(const Character& chi) {
    const PrimeContext& ctx = chi.context();
    const std::uint32_t p = ctx.p();
    const std::uint64_t k = chi.exponent();
    std::complex<double> acc = 0.0;
    for (std::uint32_t x = 1; x < p; ++x)
        acc += ctx.mul_root(k * ctx.dlog(x)) * ctx.add_root(x);
    return acc;
}

std::complex<double> jacobi_sum(const Character& chi, const Character& lambda) {
    if (&chi.context() != &lambda.context())
        throw std::invalid_argument("jacobi_sum: mixed prime contexts");
    const PrimeContext& ctx = chi.context();
    const std::uint32_t p = ctx.p();
    const std::uint64_t kc = chi.exponent();
    const std::uint64_t kl = lambda.exponent();
    // x = 0 and x = 1 contribute nothing (chi(0) = lambda(0) = 0).
    std::complex<double> acc = 0.0;
    for (std::uint32_t x = 2; x < p; ++x)
        acc += ctx.mul_root(kc * ctx.dlog(x)) * ctx.mul_root(kl * ctx.dlog(p + 1 - x));
    return acc;
}

std::complex<double> ff_binomial(const Character& a, const Character& b) {
    if (&a.context() != &b.context())
        throw std::invalid_argument("ff_binomial: mixed prime contexts");
    const PrimeContext& ctx = a.context();
    // b(-1) is +-1: the exponent at -1 is k (p-1)/2 mod p-1, either 0 or (p-1)/2.
    double b_minus1 = b(ctx.p() - 1).real();
    return b_minus1 / ctx.p() * jacobi_sum(a, b.conj());
}

GaussianHypergeometric::GaussianHypergeometric(std::vector<Character> upper,
                                               std::vector<Character> lower) {
    if (upper.empty() || upper.size() != lower.size() + 1)
        throw std::invalid_argument("GaussianHypergeometric: need n+1 upper and n lower characters");
    ctx_ = &upper[0].context();
    for (const auto& ch : upper)
        if (&ch.context() != ctx_) throw std::invalid_argument("GaussianHypergeometric: mixed prime contexts");
    for (const auto& ch : lower)
        if (&ch.context() != ctx_) throw std::invalid_argument("GaussianHypergeometric: mixed prime contexts");

    const std::uint32_t m = ctx_->p() - 1;
    coeff_.resize(m);
    for (std::uint32_t s = 0; s < m; ++s) {
        Character chi = ctx_->character(s);
        std::complex<double> c = ff_binomial(upper[0] * chi, chi);
        for (std::size_t i = 1; i < upper.size(); ++i)
            c *= ff_binomial(upper[i] * chi, lower[i - 1] * chi);
        coeff_[s] = c;
    }
}

std::complex<double> GaussianHypergeometric::operator()(std::int64_t x) const {
    const std::uint32_t p = ctx_->p();
    std::int64_t r = mod_i64(x, p);
    if (r == 0) return 0.0;  // every chi(0) vanishes
    const std::uint64_t xl = ctx_->dlog(static_cast<std::uint32_t>(r));
    std::complex<double> acc = 0.0;
    for (std::uint32_t s = 0; s + 1 < p; ++s)
        acc += coeff_[s] * ctx_->mul_root(s * xl);
    return acc * (static_cast<double>(p) / (p - 1.0));
}

std::complex<double> gaussian_hyp(const std::vector<Character>& upper,
                                  const std::vector<Character>& lower, std::int64_t x) {
    return GaussianHypergeometric(upper, lower)(x);
}

GaussianHypergeometric make_quadratic_3f2(const PrimeContext& ctx) {
    Character phi = ctx.quadratic();
    Character eps = ctx.trivial();
    return GaussianHypergeometric({phi, phi, phi}, {eps, eps});
}

std::complex<double> quadratic_3f2(const PrimeContext& ctx, std::int64_t x) {
    return make_quadratic_3f2(ctx)(x);
}

SnappedRational snap_to_rational(std::complex<double> v, const BigInt& denominator, double tol) {
    if (denominator <= 0)
        throw std::invalid_argument("snap_to_rational: denominator must be positive");
    if (std::abs(v.imag()) > tol)
        throw std::invalid_argument("snap_to_rational: imaginary part " + std::to_string(v.imag()) +
                                    " exceeds tolerance");
    const double den = static_cast<double>(denominator);
    const double scaled = v.real() * den;
    BigInt num{std::llround(scaled)};
    Rational value(num, denominator);
    const double re_err = v.real() - static_cast<double>(value);
    const double residual = std::hypot(re_err, v.imag());
    if (residual > tol)
        throw std::invalid_argument("snap_to_rational: residual " + std::to_string(residual) +
                                    " exceeds tolerance (value not near a multiple of 1/denominator)");
    return SnappedRational{std::move(value), residual};
}

std::uint32_t cubic_discriminant_mod_p(const PrimeContext& ctx, const Cubic& f) {
    const std::uint64_t p = ctx.p();
    auto c = reduce_cubic_coeffs(ctx.p(), f);
    const std::uint64_t c0 = c[0], c1 = c[1], c2 = c[2], c3 = c[3];
    std::uint64_t t1 = mulmod(mulmod(mulmod(mulmod(18, c3, p), c2, p), c1, p), c0, p);
    std::uint64_t t2 = mulmod(mulmod(4, mulmod(mulmod(c2, c2, p), c2, p), p), c0, p);
    std::uint64_t t3 = mulmod(mulmod(c2, c2, p), mulmod(c1, c1, p), p);
    std::uint64_t t4 = mulmod(mulmod(4, c3, p), mulmod(mulmod(c1, c1, p), c1, p), p);
    std::uint64_t t5 = mulmod(mulmod(27, mulmod(c3, c3, p), p), mulmod(c0, c0, p), p);
    std::uint64_t disc = (t1 + t3 + 3 * p - (t2 % p) - (t4 % p) - (t5 % p)) % p;
    return static_cast<std::uint32_t>(disc);
}

std::int64_t trace_frobenius(const PrimeContext& ctx, const Cubic& f) {
    const std::uint32_t p = ctx.p();
    auto c = reduce_cubic_coeffs(p, f);
    if (c[3] == 0)
        throw std::invalid_argument("trace_frobenius: leading coefficient vanishes mod p");
    if (cubic_discriminant_mod_p(ctx, f) == 0)
        throw std::invalid_argument("trace_frobenius: singular reduction at p = " + std::to_string(p));
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < p; ++x)
        sum += ctx.legendre(static_cast<std::int64_t>(eval_cubic(c, x, p)));
    return -sum;
}

std::int64_t count_points(const PrimeContext& ctx, const Cubic& f) {
    const std::uint32_t p = ctx.p();
    auto c = reduce_cubic_coeffs(p, f);
    std::int64_t count = 1;  // point at infinity
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint64_t fx = eval_cubic(c, x, p);
        for (std::uint64_t y = 0; y < p; ++y)
            if (y * y % p == fx) ++count;
    }
    return count;
}

Cubic reduce_to_cubic(const PrimeContext& ctx, const ec::WeierstrassCurve& curve) {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 matches the curve's
    // point count and trace for odd p (the left side substitution is a
    // bijection on y, and 4 is a square).
    const std::uint32_t p = ctx.p();
    return Cubic{reduce_mod(curve.b6(), p), reduce_mod(2 * curve.b4(), p),
                 reduce_mod(curve.b2(), p), 4};
}

std::int64_t trace_frobenius(const PrimeContext& ctx, const ec::WeierstrassCurve& curve) {
    return trace_frobenius(ctx, reduce_to_cubic(ctx, curve));
}

std::int64_t count_points(const PrimeContext& ctx, const ec::WeierstrassCurve& curve) {
    return count_points(ctx, reduce_to_cubic(ctx, curve));
}

std::int64_t jacobsthal_phi_cubic(const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    if (p <= 3)
        throw std::invalid_argument("jacobsthal_phi_cubic: requires p > 3");
    std::int64_t sum = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = (mulmod(mulmod(x, x, p), x, p) + 1) % p;
        sum += ctx.legendre(static_cast<std::int64_t>(v));
    }
    return sum;
}

std::pair<std::int64_t, std::int64_t> represent_a2_3b2(std::uint32_t p) {
    if (p % 3 != 1)
        throw std::invalid_argument("represent_a2_3b2: requires p = 1 mod 3");
    std::int64_t found_a = 0, found_b = -1;
    int hits = 0;
    for (std::int64_t b = 0; 3 * b * b <= p; ++b) {
        const std::int64_t r = static_cast<std::int64_t>(p) - 3 * b * b;
        auto a = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r))));
        while (a * a > r) --a;
        while ((a + 1) * (a + 1) <= r) ++a;
        if (a > 0 && a * a == r) {
            ++hits;
            found_a = a;
            found_b = b;
        }
    }
    if (hits == 0)
        throw std::invalid_argument("represent_a2_3b2: no representation (is p prime?)");
    if (hits > 1)
        throw std::logic_error("represent_a2_3b2: representation not unique");
    if (found_a % 3 != 2) found_a = -found_a;  // normalize a = -1 mod 3
    if (((found_a % 3) + 3) % 3 != 2)
        throw std::logic_error("represent_a2_3b2: cannot normalize a = -1 mod 3");
    return {found_a, found_b};
}

bool good_reduction(const ec::WeierstrassCurve& curve, std::uint32_t p) {
    Rational disc = ec::discriminant(curve);
    if (disc == 0)
        throw std::invalid_argument("good_reduction: curve is singular");
    for (const Rational* coef : {&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6})
        if (denominator(*coef) % p == 0)
            throw std::invalid_argument("good_reduction: coefficient not p-integral");
    return numerator(disc) % p != 0;
}

bool ono_condition(const Rational& lambda, std::uint32_t p) {
    if (lambda == 0 || lambda == -1)
        throw std::invalid_argument("ono_condition: lambda must avoid 0 and -1");
    const BigInt& r = numerator(lambda);
    const BigInt& s = denominator(lambda);
    return r % p != 0 && s % p != 0 && (r + s) % p != 0;
}

std::int64_t reduce_mod(const Rational& q, std::uint32_t p) {
    const std::int64_t den = mod_big(denominator(q), p);
    if (den == 0)
        throw std::invalid_argument("reduce_mod: denominator divisible by p");
    const std::int64_t num = mod_big(numerator(q), p);
    const std::uint64_t inv = powmod(static_cast<std::uint64_t>(den), p - 2, p);
    return static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(num), inv, p));
}

} // namespace hyperell::ff
