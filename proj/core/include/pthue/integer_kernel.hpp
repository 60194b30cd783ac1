#pragma once

#include <gmpxx.h>

#include <utility>

namespace pthue {

// Exact arbitrary-precision integers and rationals.  All arithmetic in this
// library is exact; no floating point participates in any certified result.
using BigInt = mpz_class;
using Rational = mpq_class;

struct IcbrtResult {
    BigInt root;
    bool exact;
};

// Floor cube root by integer Newton iteration with a floor-correcting final
// step.  exact <=> root^3 == n.  Rejects negative input.
IcbrtResult icbrt(const BigInt& n);

// True iff n == m^3 for some integer m >= 0.
bool is_perfect_cube(const BigInt& n);

// base^exp mod modulus by square and multiply.  Requires exp >= 0 and
// modulus >= 2.  Negative bases are reduced into [0, modulus) first.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Trial-division primality, adequate for the small primes this pipeline
// selects.
bool is_prime_trial(long n);

// num/den in canonical form.  The raw two-integer mpq constructor does not
// reduce, and gmp comparison semantics assume reduced fractions, so decimal
// literals like 2714/1000 must pass through here.
Rational frac(long num, long den);

// Closed interval with exact rational endpoints.  Every operation returns an
// enclosure containing the true real result.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contained_in(const Rational& l, const Rational& h) const {
        return l <= lo && hi <= h;
    }

    RationalInterval shifted(const Rational& d) const {
        return RationalInterval(lo + d, hi + d);
    }

    // 1/x for intervals with lo > 0.
    RationalInterval inverted() const;

    // Every point of *this is strictly below every point of other.
    bool strictly_below(const RationalInterval& other) const {
        return hi < other.lo;
    }
    bool strictly_below(const Rational& q) const { return hi < q; }
    bool strictly_above(const Rational& q) const { return lo > q; }
};

// Enclosure of n^(1/3) of width <= the requested width, endpoints exact
// rationals on a decimal grid found by bisection.  One guard digit beyond the
// requested width keeps the endpoints strictly informative (the grid cell at
// exactly the requested width can place lo on a decision boundary).
RationalInterval cbrt_interval(const BigInt& n, const Rational& width);

// Enclosure of { sqrt(t) : t in x } for x.lo >= 0, by rational bisection on
// squares.  Each endpoint carries slack at most the requested width.
RationalInterval sqrt_interval(const RationalInterval& x, const Rational& width);

} // namespace pthue
