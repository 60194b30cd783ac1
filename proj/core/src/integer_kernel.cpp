#include "pthue/integer_kernel.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pthue {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 cube_u64_floor(u64 v) {
    // v < 2^64, so the root is < 2^22 and its cube fits u128.
    u64 r = static_cast<u64>(std::cbrt(static_cast<double>(v))) + 1;
    while (u128(r) * r * r > v) --r;
    while (u128(r + 1) * (r + 1) * (r + 1) <= v) ++r;
    return r;
}

} // namespace

IcbrtResult icbrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("icbrt: negative input");
    if (n == 0) return {BigInt(0), true};
    if (n.fits_ulong_p()) {
        u64 v = n.get_ui();
        u64 r = cube_u64_floor(v);
        return {BigInt(static_cast<unsigned long>(r)), u128(r) * r * r == v};
    }
    // Newton iteration from a power-of-two overestimate; the iterate
    // decreases monotonically to within one of the floor.
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    BigInt x = 1;
    x <<= bits / 3 + 2;
    for (;;) {
        BigInt y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return {x, x * x * x == n};
}

bool is_perfect_cube(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("is_perfect_cube: negative input");
    return icbrt(n).exact;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");

    BigInt b = base % modulus;
    if (b < 0) b += modulus;

    // Products of residues below 2^31 stay below 2^62.
    if (modulus.fits_ulong_p() && exp.fits_ulong_p() && modulus <= 0x7fffffffL) {
        u64 m = modulus.get_ui();
        u64 e = exp.get_ui();
        u64 acc = 1 % m;
        u64 cur = b.get_ui();
        while (e > 0) {
            if (e & 1) acc = acc * cur % m;
            cur = cur * cur % m;
            e >>= 1;
        }
        return BigInt(static_cast<unsigned long>(acc));
    }

    BigInt acc = 1;
    size_t nbits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return acc % modulus;
    for (size_t i = nbits; i-- > 0;) {
        acc = acc * acc % modulus;
        if (mpz_tstbit(exp.get_mpz_t(), i)) acc = acc * b % modulus;
    }
    return acc;
}

Rational frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime_trial(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

RationalInterval::RationalInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
}

RationalInterval RationalInterval::inverted() const {
    if (lo <= 0) throw std::domain_error("RationalInterval: inversion needs lo > 0");
    return RationalInterval(1 / hi, 1 / lo);
}

RationalInterval cbrt_interval(const BigInt& n, const Rational& width) {
    if (n < 1) throw std::invalid_argument("cbrt_interval: n must be >= 1");
    if (width <= 0) throw std::invalid_argument("cbrt_interval: width must be > 0");

    // Smallest d with 10^-d <= width, plus one guard digit.
    Rational inv_width = 1 / width;
    BigInt pow10 = 1;
    while (Rational(pow10) < inv_width) pow10 *= 10;
    BigInt D = pow10 * 10;       // 1/D <= width/10 < width
    BigInt M = n * D * D * D;

    // Largest r with r^3 <= M, by bisection.
    size_t bits = mpz_sizeinbase(M.get_mpz_t(), 2);
    BigInt lo = 0, hi = 1;
    hi <<= bits / 3 + 2;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid * mid <= M)
            lo = mid;
        else
            hi = mid;
    }
    if (lo * lo * lo == M) {
        Rational exact{lo, D};
        exact.canonicalize();
        return RationalInterval(exact, exact);
    }
    Rational l{lo, D}, h{lo + 1, D};
    l.canonicalize();
    h.canonicalize();
    return RationalInterval(l, h);
}

RationalInterval sqrt_interval(const RationalInterval& x, const Rational& width) {
    if (x.lo < 0) throw std::domain_error("sqrt_interval: needs lo >= 0");
    if (width <= 0) throw std::invalid_argument("sqrt_interval: width must be > 0");

    // Upper endpoint: b^2 >= x.hi throughout.
    Rational a = 0, b = x.hi < 1 ? Rational(1) : x.hi;
    while (b - a > width) {
        Rational m = (a + b) / 2;
        if (m * m >= x.hi)
            b = m;
        else
            a = m;
    }
    Rational upper = b;

    // Lower endpoint: a2^2 <= x.lo throughout.
    Rational a2 = 0, b2 = x.lo < 1 ? Rational(1) : x.lo;
    while (b2 - a2 > width) {
        Rational m = (a2 + b2) / 2;
        if (m * m <= x.lo)
            a2 = m;
        else
            b2 = m;
    }
    return RationalInterval(a2, upper);
}

} // namespace pthue
