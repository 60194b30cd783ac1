#pragma once

#include "pthue/companion.hpp"
#include "pthue/padic_series.hpp"
#include "pthue/poly.hpp"
#include "pthue/strassman.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pthue {

// Constants of the field Q(2^(1/3)) presented through theta = 2^(1/3) - 1,
// a root of f(X) = X^3 + 3X^2 + 3X - 1 (so theta + 1 has norm 2 and theta
// is a unit: f(0) = -1).
struct CubicFieldData {
    IntPoly f;
    BigInt disc;  // -108
    RationalInterval theta;      // real root of f
    RationalInterval theta_inv;  // the candidate fundamental unit, ~3.8473
    int unit_rank;               // r + s - 1 = 1 (one real, one complex pair)
};

// Exact-rational certificate that theta^-1 generates the units: any
// fundamental unit u > 1 has u^3 > d/4 - 7 = 20, and a proper power
// relation theta^-1 = u^m, m >= 2 would force u <= sqrt(theta^-1) < 20^(1/3),
// contradicting u > 20^(1/3).
struct UnitCertificate {
    Rational lower_bound_u_cubed;        // 20
    RationalInterval theta_inv_enclosure;
    RationalInterval cbrt20;             // enclosure of 20^(1/3)
    RationalInterval sqrt_theta_inv;     // enclosure of sqrt(theta^-1)
    bool fundamental = false;
    std::string power_check;  // the inequality chain, human readable
};

// The splitting data of f at p: three Hensel-lifted roots mod p^k and the
// perturbations root^(p-1) - 1, each of valuation >= 1 by Fermat's little
// theorem.
struct SplitData {
    long p = 31;
    int k = 6;
    PadicInt alpha, beta, gamma;  // lifts of the sorted roots mod p
    PadicInt a, b, c;             // root^(p-1) - 1
    long period = 30;             // p - 1
};

// Analysis of one surviving residue class r mod period: the class series
// u_r(s) = sum_i A_i(r) Phi_{e_i}(s) interpolates c_{r+period*s}, its
// coefficient valuations bound the zero count, and classes the bound cannot
// close are eliminated by an auxiliary congruence sieve.
struct ClassAnalysis {
    long r = 0;
    std::vector<PadicInt> lambda;  // coefficients lambda_0..N
    ValuationProfile profile;
    long bound = 0;
    std::vector<long> known_zero_s;  // s with c_{r+period*s} == 0 exhibited
    RootVerdict verdict = RootVerdict::bounded_only;
    std::optional<long> eliminated_by_q;  // auxiliary modulus, when needed
};

// Full certificate for 2x^3 - y^3 = norm.  Replayable: every field is
// recomputable from (norm, p, k) alone; doc is the serialized JSON envelope.
struct ThueCertificate {
    int norm = 1;
    long p = 31;
    int k = 6;
    std::vector<long> surviving;   // residue sieve output
    std::vector<ClassAnalysis> classes;
    std::vector<long> zero_set;    // all integer zeros n of c_n
    std::vector<std::pair<BigInt, BigInt>> solutions;           // (x, y)
    std::vector<std::pair<BigInt, BigInt>> positive_solutions;  // x, y >= 1
    nlohmann::ordered_json doc;
};

// Assembles f, disc = -108, enclosures for theta and theta^-1; verifies
// irreducibility by the rational root test.
CubicFieldData build_field_constants();

// Certifies the unit group is {+- theta^n} through the exact inequality
// chain; raises inconclusive_error if an interval comparison cannot decide.
UnitCertificate verify_fundamental_unit(const CubicFieldData& data);

// Hensel lifts and perturbations at p (default 31), precision k.  Rejects
// primes where f does not split completely or p | 2*disc.
SplitData build_split_data(long p = 31, int k = 6);

// Residues r mod period with c_r == 0 mod p: exactly the classes the mod-p
// congruence cannot rule out.  All other classes are certified solution-free
// by c_{r + period*s} == c_r mod p.
std::vector<long> residue_sieve(const SplitData& split, const CompanionSequence& seq);

// Coefficients lambda_j of the class series u_r, j = 0..N: lambda_0 is the
// p-adic image of c_r and lambda_j = sum_i A_i(r) log(1+e_i)^j / j!.
std::vector<PadicInt> lambda_coefficients(const SplitData& split, long r);

// Valuation profile of u_r.  lambda_0's entry uses the exact integer c_r
// (exactly zero for r in {0, 1}); the tail is the structural interpolation
// bound.
ValuationProfile lambda_profile(const SplitData& split, long r);

// The full pipeline: unit certificate -> sieve -> per-class Strassman
// verdict -> auxiliary congruence elimination for classes Strassman alone
// cannot close -> zero set -> solutions (x, y) of 2x^3 - y^3 = norm via
// +-theta^n.  Inconclusive lambda analysis retries at k+2 up to 12, then
// aborts naming the failing check.
ThueCertificate solve_thue(int norm, long p = 31, int k = 6);

} // namespace pthue
