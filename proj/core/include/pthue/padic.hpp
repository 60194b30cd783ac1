#pragma once

#include "pthue/integer_kernel.hpp"

namespace pthue {

// A p-adic integer known to precision k, i.e. a residue mod p^k together
// with its valuation.  The valuation is exact whenever the residue is
// nonzero; a zero residue only certifies v >= k (the sentinel state).
struct PadicInt {
    long prime = 0;
    int prec = 0;
    BigInt residue;  // in [0, p^prec)
    int valuation = 0;  // capped at prec; exact iff residue != 0

    PadicInt() = default;

    // Reduces x into [0, p^k) and computes the valuation.  p must be prime
    // (trial division check), k in [1, 64].
    static PadicInt from_integer(long p, int k, const BigInt& x);

    BigInt modulus() const;
    bool is_zero_residue() const { return residue == 0; }
    // True when the stored valuation is the exact p-adic valuation, false
    // when it is only the lower bound v >= prec.
    bool valuation_exact() const { return residue != 0; }
};

enum class PadicOp { add, sub, mul };

// Exact result mod p^min(kx, ky) with recomputed valuation.  Operands must
// share the prime; precision combines pessimistically.
PadicInt padic_arith(const PadicInt& x, const PadicInt& y, PadicOp op);

PadicInt padic_add(const PadicInt& x, const PadicInt& y);
PadicInt padic_sub(const PadicInt& x, const PadicInt& y);
PadicInt padic_mul(const PadicInt& x, const PadicInt& y);

// Multiplicative inverse mod p^k.  Rejects non-units (valuation >= 1): a
// division the method forbids, never a silent precision loss.
PadicInt padic_inv(const PadicInt& x);

// log x = sum_{n>=1} (-1)^(n+1) (x-1)^n / n, for v(x-1) >= 1 and p odd.
// Terms are carried at guarded internal precision so the returned residue is
// correct mod p^k despite the divisions by n.
PadicInt padic_log(const PadicInt& x);

// exp z = sum_{n>=0} z^n / n!, for v(z) >= 1 and p odd (then v(n!) < n/(p-1)
// and the series converges).
PadicInt padic_exp(const PadicInt& z);

} // namespace pthue
