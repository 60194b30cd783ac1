#pragma once

#include "pthue/padic.hpp"

#include <vector>

namespace pthue {

// Dense integer polynomial, coefficients low to high, nonzero leading
// coefficient (the zero polynomial is represented by {0}).
struct IntPoly {
    std::vector<BigInt> coeffs;

    static IntPoly from_coeffs(std::vector<BigInt> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool monic() const { return coeffs.back() == 1; }
    const BigInt& operator[](int i) const { return coeffs[i]; }
};

// The cubic f(X) = X^3 + 3X^2 + 3X - 1, satisfied by theta = 2^(1/3) - 1.
IntPoly unit_cubic();

// Horner evaluation mod m, m >= 2.
BigInt poly_eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m);

IntPoly derivative(const IntPoly& f);

// All x in [0, p) with f(x) == 0 mod p, by exhaustive scan; sorted.  p must
// pass a trial-division primality check.
std::vector<long> roots_mod_p(const IntPoly& f, long p);

// Newton lift of a simple root x0 of monic f mod p to the unique root mod
// p^k congruent to x0, doubling precision each step.  Rejects f'(x0) == 0
// mod p (the simple-root hypothesis fails, no unique lift exists).
PadicInt hensel_lift(const IntPoly& f, long p, long x0, int k);

// 18abc - 4a^3 c + a^2 b^2 - 4b^3 - 27c^2 for monic X^3 + aX^2 + bX + c.
BigInt discriminant_cubic(const IntPoly& f);

// Smallest prime p not dividing 2*disc(f) where monic f acquires deg(f)
// distinct roots, found by direct search.  For the unit cubic this re-derives
// p = 31 rather than hard-coding it.
long smallest_split_prime(const IntPoly& f);

} // namespace pthue
