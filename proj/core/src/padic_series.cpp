#include "pthue/padic_series.hpp"

#include <climits>
#include <stdexcept>

namespace pthue {

namespace {

BigInt pow_long(long p, int k) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k));
    return m;
}

long factorial_valuation(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;
    }
    return v;
}

} // namespace

long PadicSeries::tail_floor_2x(long n) const {
    if (log_valuation == 0) return LONG_MAX / 2;  // finite series, tail is zero
    // 2 v(gamma_n) >= 2 n vL - 2 v(n!) >= 2 n vL - (n - 1) >= n(2 vL - 1) + 1
    // for p >= 3 (then v(n!) <= (n-1)/2).
    return n * (2 * log_valuation - 1) + 1;
}

int interpolation_truncation_index(long p, int k) {
    // Smallest N with j - v(j!) >= k for all j > N; v(j!) <= (j-1)/(p-1)
    // gives j - (j-1)/(p-1) >= k once j >= (k(p-1) - 1)/(p-2).
    long num = static_cast<long>(k) * (p - 1) - 1;
    long den = p - 2;
    return static_cast<int>((num + den - 1) / den);
}

PadicSeries interpolation_series(const PadicInt& b) {
    if (b.prime == 2)
        throw std::invalid_argument(
            "interpolation_series: the p = 2 branch is not implemented");
    if (!b.is_zero_residue() && b.valuation == 0)
        throw std::domain_error("interpolation_series: needs v(b) >= 1");

    long p = b.prime;
    int k = b.prec;
    PadicInt one_plus_b = PadicInt::from_integer(p, k, b.residue + 1);
    PadicInt L = padic_log(one_plus_b);

    PadicSeries s;
    s.prime = p;
    s.prec = k;
    // v(log(1+b)) = v(b) for p odd; a vanished residue still certifies >= k.
    s.log_valuation = L.valuation_exact() ? L.valuation : L.prec;
    if (s.log_valuation < 1)
        throw std::domain_error("interpolation_series: log valuation below 1");

    int N = interpolation_truncation_index(p, k);
    BigInt target = pow_long(p, k);
    s.coeffs.reserve(N + 1);
    s.coeffs.push_back(PadicInt::from_integer(p, k, 1));
    for (int j = 1; j <= N; ++j) {
        long e = factorial_valuation(j, p);
        BigInt mod_j = pow_long(p, k + static_cast<int>(e));
        // L^j is determined mod p^(k + (j-1) vL), which covers p^(k+e).
        BigInt lpow = mod_pow(L.residue, BigInt(j), mod_j);
        BigInt fact_unit = 1;
        for (long t = 2; t <= j; ++t) {
            long tt = t;
            while (tt % p == 0) tt /= p;
            fact_unit = fact_unit * tt % target;
        }
        BigInt q = lpow / pow_long(p, static_cast<int>(e));
        BigInt inv_f;
        mpz_invert(inv_f.get_mpz_t(), fact_unit.get_mpz_t(), target.get_mpz_t());
        s.coeffs.push_back(PadicInt::from_integer(p, k, q * inv_f));
    }
    return s;
}

PadicInt series_eval(const PadicSeries& s, const PadicInt& x) {
    if (s.prime != x.prime)
        throw std::invalid_argument("series_eval: prime mismatch");
    int k = std::min(s.prec, x.prec);
    BigInt m = pow_long(s.prime, k);
    BigInt acc = 0;
    for (size_t i = s.coeffs.size(); i-- > 0;) {
        acc = (acc * x.residue + s.coeffs[i].residue) % m;
    }
    return PadicInt::from_integer(s.prime, k, acc);
}

} // namespace pthue
