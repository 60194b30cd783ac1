#include "pthue/padic.hpp"

#include <stdexcept>
#include <string>

namespace pthue {

namespace {

BigInt pow_long(long p, int k) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k));
    return m;
}

void check_prime(long p) {
    if (!is_prime_trial(p))
        throw std::invalid_argument("PadicInt: p = " + std::to_string(p) + " is not prime");
}

void check_same_prime(const PadicInt& x, const PadicInt& y) {
    if (x.prime != y.prime)
        throw std::invalid_argument("padic_arith: prime mismatch (" +
                                    std::to_string(x.prime) + " vs " +
                                    std::to_string(y.prime) + ")");
}

void check_odd_prime(const PadicInt& x, const char* who) {
    if (x.prime == 2)
        throw std::invalid_argument(std::string(who) +
                                    ": the p = 2 branch is not implemented; the pipeline fixes an odd prime");
}

long floor_log(long n, long base) {
    long r = 0;
    while (n >= base) {
        n /= base;
        ++r;
    }
    return r;
}

// v_p(n!) by Legendre's formula.
long factorial_valuation(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;
    }
    return v;
}

} // namespace

PadicInt PadicInt::from_integer(long p, int k, const BigInt& x) {
    check_prime(p);
    if (k < 1 || k > 64)
        throw std::invalid_argument("PadicInt: precision must be in [1, 64]");
    PadicInt r;
    r.prime = p;
    r.prec = k;
    BigInt m = pow_long(p, k);
    r.residue = x % m;
    if (r.residue < 0) r.residue += m;
    if (r.residue == 0) {
        r.valuation = k;  // only v >= k is known
    } else {
        BigInt tmp;
        r.valuation = static_cast<int>(
            mpz_remove(tmp.get_mpz_t(), r.residue.get_mpz_t(), BigInt(p).get_mpz_t()));
    }
    return r;
}

BigInt PadicInt::modulus() const { return pow_long(prime, prec); }

PadicInt padic_arith(const PadicInt& x, const PadicInt& y, PadicOp op) {
    check_same_prime(x, y);
    int k = std::min(x.prec, y.prec);
    BigInt r;
    switch (op) {
        case PadicOp::add: r = x.residue + y.residue; break;
        case PadicOp::sub: r = x.residue - y.residue; break;
        case PadicOp::mul: r = x.residue * y.residue; break;
    }
    return PadicInt::from_integer(x.prime, k, r);
}

PadicInt padic_add(const PadicInt& x, const PadicInt& y) { return padic_arith(x, y, PadicOp::add); }
PadicInt padic_sub(const PadicInt& x, const PadicInt& y) { return padic_arith(x, y, PadicOp::sub); }
PadicInt padic_mul(const PadicInt& x, const PadicInt& y) { return padic_arith(x, y, PadicOp::mul); }

PadicInt padic_inv(const PadicInt& x) {
    if (x.is_zero_residue() || x.valuation != 0)
        throw std::domain_error("padic_inv: non-unit input (valuation >= 1)");
    BigInt m = x.modulus();
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), x.residue.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("padic_inv: residue not invertible");
    return PadicInt::from_integer(x.prime, x.prec, r);
}

PadicInt padic_log(const PadicInt& x) {
    check_odd_prime(x, "padic_log");
    long p = x.prime;
    int k = x.prec;
    BigInt w = x.residue - 1;
    PadicInt wp = PadicInt::from_integer(p, k, w);
    if (!wp.is_zero_residue() && wp.valuation == 0)
        throw std::domain_error("padic_log: needs v(x - 1) >= 1");
    if (wp.is_zero_residue()) return PadicInt::from_integer(p, k, 0);

    int vw = wp.valuation;
    // Terms beyond n0 have v(w^n/n) >= n*vw - floor(log_p n) >= k; the
    // bound is nondecreasing in n, so stopping at the first such n is sound.
    long n_max = 1;
    while (n_max * vw - floor_log(n_max, p) < k) ++n_max;
    long E = floor_log(n_max, p) + 1;  // max v_p(n) among summed terms

    BigInt big_mod = pow_long(p, k + static_cast<int>(E));
    BigInt target = pow_long(p, k);
    BigInt acc = 0;
    BigInt wpow = 1;
    BigInt wred = wp.residue;
    for (long n = 1; n < n_max; ++n) {
        wpow = wpow * wred % big_mod;
        long e = 0;
        long nn = n;
        while (nn % p == 0) {
            nn /= p;
            ++e;
        }
        // w^n is divisible by p^(n*vw) >= p^e, so the division is exact.
        BigInt t = wpow / pow_long(p, static_cast<int>(e));
        BigInt inv_n;
        mpz_invert(inv_n.get_mpz_t(), BigInt(nn).get_mpz_t(), target.get_mpz_t());
        t = t * inv_n % target;
        if (n % 2 == 0)
            acc -= t;
        else
            acc += t;
    }
    return PadicInt::from_integer(p, k, acc);
}

PadicInt padic_exp(const PadicInt& z) {
    check_odd_prime(z, "padic_exp");
    long p = z.prime;
    int k = z.prec;
    if (!z.is_zero_residue() && z.valuation == 0)
        throw std::domain_error("padic_exp: needs v(z) >= 1");
    if (z.is_zero_residue()) return PadicInt::from_integer(p, k, 1);

    int vz = z.valuation;
    // v(z^n/n!) >= n*vz - (n-1)/(p-1), increasing in n for p >= 3.
    long n_max = 1;
    while (n_max * vz - (n_max - 1) / (p - 1) < k) ++n_max;

    BigInt target = pow_long(p, k);
    BigInt acc = 1;
    for (long n = 1; n <= n_max; ++n) {
        long e = factorial_valuation(n, p);
        BigInt mod_n = pow_long(p, k + static_cast<int>(e));
        // z^n is known mod p^(k + (n-1)vz), which covers p^(k+e).
        BigInt zpow = mod_pow(z.residue, BigInt(n), mod_n);
        BigInt fact_unit = 1;
        for (long j = 2; j <= n; ++j) {
            long jj = j;
            while (jj % p == 0) jj /= p;
            fact_unit = fact_unit * jj % target;
        }
        BigInt t = zpow / pow_long(p, static_cast<int>(e));
        BigInt inv_f;
        mpz_invert(inv_f.get_mpz_t(), fact_unit.get_mpz_t(), target.get_mpz_t());
        acc += t * inv_f % target;
    }
    return PadicInt::from_integer(p, k, acc);
}

} // namespace pthue
