#pragma once

#include "pthue/padic.hpp"

#include <vector>

namespace pthue {

// Power series over Z_p with finitely many stored coefficients gamma_0..N
// and a structural bound on the dropped tail.  When log_valuation >= 1 the
// series is an interpolation series and v(gamma_n) >= n*log_valuation - v(n!)
// for every n; log_valuation == 0 marks a finite series (all coefficients
// beyond the stored ones are exactly zero).
struct PadicSeries {
    long prime = 0;
    int prec = 0;
    std::vector<PadicInt> coeffs;
    int log_valuation = 0;

    // Structural tail bound, times 2 to stay in integers: for n beyond the
    // stored coefficients, 2*v(gamma_n) >= tail_floor_2x(n).  With
    // v(log) >= 1 and p >= 3, v(gamma_n) >= n - v(n!) >= (n+1)/2.
    long tail_floor_2x(long n) const;
};

// Interpolation series Phi_b with Phi_b(r) = (1+b)^r for every integer r:
// gamma_n = log(1+b)^n / n!.  Requires v(b) >= 1 and p odd.  The truncation
// index N = ceil((k(p-1)-1)/(p-2)) makes every dropped term vanish mod p^k
// at integer arguments.
PadicSeries interpolation_series(const PadicInt& b);

// sum gamma_n x^n mod p^min(prec, x.prec) over the stored coefficients; the
// tail is below the working precision by the structural bound (x ranges over
// Z_p, v(x) >= 0).
PadicInt series_eval(const PadicSeries& s, const PadicInt& x);

// Truncation index for the interpolation series at prime p, precision k.
int interpolation_truncation_index(long p, int k);

} // namespace pthue
