#pragma once

#include "pthue/integer_kernel.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace pthue {

// Coordinates of theta^n in the basis (1, theta, theta^2) of Z[theta],
// theta^3 = 1 - 3 theta - 3 theta^2.
struct ThetaCoords {
    BigInt x, y, z;
};

// Product in Z[theta]: reduce the degree-4 convolution with
// theta^3 = 1 - 3t - 3t^2 and theta^4 = -3 + 10t + 6t^2.
ThetaCoords ring_mul(const ThetaCoords& u, const ThetaCoords& v);

// theta^n by repeated multiplication; negative n via theta^-1 = 3 + 3t + t^2.
ThetaCoords theta_power_coords(long n);

// c_{n+3} = -3 c_{n+2} - 3 c_{n+1} + c_n with (c_0, c_1, c_2) = (0, 0, 1);
// backward rule c_n = c_{n+3} + 3 c_{n+2} + 3 c_{n+1}.  c_n equals the
// theta^2-coordinate of theta^n.  Memoized in both directions.
class CompanionSequence {
public:
    BigInt value(long n) const;

private:
    mutable std::map<long, BigInt> memo_;
    mutable std::mutex mutex_;
};

// c_n through a shared memoized sequence.
BigInt companion_value(long n);

// Zero set of (c_n mod q) over one period.  The recurrence's state map has
// determinant 1, so the orbit of (c_n, c_{n+1}, c_{n+2}) mod q is purely
// periodic in both directions and the zero residues describe all n in Z.
struct AuxSieveData {
    long q = 0;
    long period = 0;
    std::vector<long> zeros;  // n mod period with c_n == 0 mod q, sorted
};

// Cycle-detect the state orbit mod q; nullopt when the period exceeds
// max_period.
std::optional<AuxSieveData> companion_cycle_mod(long q, long max_period);

// True iff the progression { n : n == r mod class_modulus } misses the zero
// set of c mod q entirely, checked over lcm(class_modulus, period); such a
// class contains no integer zero of c.
bool class_eliminated(const AuxSieveData& aux, long r, long class_modulus);

} // namespace pthue
