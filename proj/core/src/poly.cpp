#include "pthue/poly.hpp"

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

} // namespace

IntPoly IntPoly::from_coeffs(std::vector<BigInt> c) {
    if (c.empty()) throw std::invalid_argument("IntPoly: empty coefficient list");
    if (c.size() > 1 && c.back() == 0)
        throw std::invalid_argument("IntPoly: zero leading coefficient");
    return IntPoly{std::move(c)};
}

IntPoly unit_cubic() {
    return IntPoly::from_coeffs({BigInt(-1), BigInt(3), BigInt(3), BigInt(1)});
}

BigInt poly_eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("poly_eval_mod: modulus must be >= 2");
    BigInt acc = 0;
    for (size_t i = f.coeffs.size(); i-- > 0;) {
        acc = (acc * x + f.coeffs[i]) % m;
    }
    if (acc < 0) acc += m;
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() == 0) return IntPoly{{BigInt(0)}};
    std::vector<BigInt> d;
    d.reserve(f.coeffs.size() - 1);
    for (size_t i = 1; i < f.coeffs.size(); ++i) d.push_back(f.coeffs[i] * long(i));
    return IntPoly{std::move(d)};
}

std::vector<long> roots_mod_p(const IntPoly& f, long p) {
    if (!is_prime_trial(p))
        throw std::invalid_argument("roots_mod_p: p = " + std::to_string(p) +
                                    " is not prime");
    // Reduce the coefficients once; scan with machine words (p < 2^31).
    std::vector<long> cf;
    cf.reserve(f.coeffs.size());
    for (const BigInt& c : f.coeffs) {
        BigInt r = c % p;
        if (r < 0) r += p;
        cf.push_back(r.get_si());
    }
    std::vector<long> roots;
    for (long x = 0; x < p; ++x) {
        unsigned long acc = 0;
        for (size_t i = cf.size(); i-- > 0;)
            acc = (acc * static_cast<unsigned long>(x) + static_cast<unsigned long>(cf[i])) %
                  static_cast<unsigned long>(p);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

PadicInt hensel_lift(const IntPoly& f, long p, long x0, int k) {
    if (!f.monic()) throw std::invalid_argument("hensel_lift: f must be monic");
    if (!is_prime_trial(p)) throw std::invalid_argument("hensel_lift: p not prime");
    if (k < 1 || k > 64) throw std::invalid_argument("hensel_lift: k out of range");
    if (poly_eval_mod(f, BigInt(x0), BigInt(p)) != 0)
        throw std::invalid_argument("hensel_lift: x0 is not a root mod p");
    IntPoly fp = derivative(f);
    if (poly_eval_mod(fp, BigInt(x0), BigInt(p)) == 0)
        throw std::invalid_argument(
            "hensel_lift: f'(x0) == 0 mod p, the simple-root hypothesis fails");

    BigInt cur = BigInt(x0) % p;
    if (cur < 0) cur += p;
    int prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        BigInt m = pow_long(p, prec);
        BigInt fv = poly_eval_mod(f, cur, m);
        BigInt dv = poly_eval_mod(fp, cur, m);
        BigInt dinv;
        // f'(cur) is a unit mod p, hence invertible mod p^prec.
        if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::logic_error("hensel_lift: derivative not invertible");
        cur = (cur - fv * dinv) % m;
        if (cur < 0) cur += m;
    }
    if (poly_eval_mod(f, cur, pow_long(p, k)) != 0)
        throw std::logic_error("hensel_lift: lift failed to satisfy f == 0");
    return PadicInt::from_integer(p, k, cur);
}

BigInt discriminant_cubic(const IntPoly& f) {
    if (f.degree() != 3)
        throw std::invalid_argument("discriminant_cubic: degree must be exactly 3");
    if (!f.monic())
        throw std::invalid_argument("discriminant_cubic: f must be monic");
    const BigInt& a = f.coeffs[2];
    const BigInt& b = f.coeffs[1];
    const BigInt& c = f.coeffs[0];
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b -
           27 * c * c;
}

long smallest_split_prime(const IntPoly& f) {
    if (f.degree() != 3 || !f.monic())
        throw std::invalid_argument("smallest_split_prime: needs a monic cubic");
    BigInt disc = discriminant_cubic(f);
    if (disc == 0)
        throw std::invalid_argument("smallest_split_prime: repeated roots");
    BigInt bad = 2 * disc;
    for (long p = 2; p < 100000; ++p) {
        if (!is_prime_trial(p)) continue;
        if (bad % p == 0) continue;
        if (roots_mod_p(f, p).size() == 3) return p;
    }
    throw std::runtime_error("smallest_split_prime: none below 100000");
}

} // namespace pthue
