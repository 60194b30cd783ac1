#include "pthue/companion.hpp"

#include <numeric>
#include <stdexcept>

namespace pthue {

ThetaCoords ring_mul(const ThetaCoords& u, const ThetaCoords& v) {
    // Raw convolution of (x + y t + z t^2) terms, degrees 0..4.
    BigInt c0 = u.x * v.x;
    BigInt c1 = u.x * v.y + u.y * v.x;
    BigInt c2 = u.x * v.z + u.y * v.y + u.z * v.x;
    BigInt c3 = u.y * v.z + u.z * v.y;
    BigInt c4 = u.z * v.z;
    // t^3 = 1 - 3t - 3t^2, t^4 = -3 + 10t + 6t^2.
    return ThetaCoords{c0 + c3 - 3 * c4, c1 - 3 * c3 + 10 * c4,
                       c2 - 3 * c3 + 6 * c4};
}

ThetaCoords theta_power_coords(long n) {
    ThetaCoords acc{BigInt(1), BigInt(0), BigInt(0)};
    if (n == 0) return acc;
    // theta itself, or theta^-1 = 3 + 3t + t^2 for negative exponents.
    ThetaCoords step = n > 0 ? ThetaCoords{BigInt(0), BigInt(1), BigInt(0)}
                             : ThetaCoords{BigInt(3), BigInt(3), BigInt(1)};
    long count = n > 0 ? n : -n;
    for (long i = 0; i < count; ++i) acc = ring_mul(acc, step);
    return acc;
}

BigInt CompanionSequence::value(long n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (memo_.empty()) {
        memo_[0] = 0;
        memo_[1] = 0;
        memo_[2] = 1;
    }
    long lo = memo_.begin()->first;
    long hi = memo_.rbegin()->first;
    while (hi < n) {
        memo_[hi + 1] = -3 * memo_[hi] - 3 * memo_[hi - 1] + memo_[hi - 2];
        ++hi;
    }
    while (lo > n) {
        memo_[lo - 1] = memo_[lo + 2] + 3 * memo_[lo + 1] + 3 * memo_[lo];
        --lo;
    }
    return memo_[n];
}

BigInt companion_value(long n) {
    static CompanionSequence seq;
    return seq.value(n);
}

std::optional<AuxSieveData> companion_cycle_mod(long q, long max_period) {
    if (q < 2) throw std::invalid_argument("companion_cycle_mod: q must be >= 2");
    using u64 = unsigned long long;
    u64 m = static_cast<u64>(q);
    u64 s0 = 0, s1 = 0, s2 = 1 % m;
    const u64 i0 = s0, i1 = s1, i2 = s2;
    AuxSieveData data;
    data.q = q;
    long n = 0;
    for (;;) {
        if (s0 == 0) data.zeros.push_back(n);
        // c_{n+3} = -3 c_{n+2} - 3 c_{n+1} + c_n
        u64 nxt = (3 * (m - s2) % m + 3 * (m - s1) % m + s0) % m;
        s0 = s1;
        s1 = s2;
        s2 = nxt;
        ++n;
        if (s0 == i0 && s1 == i1 && s2 == i2) break;
        if (n > max_period) return std::nullopt;
    }
    data.period = n;
    return data;
}

bool class_eliminated(const AuxSieveData& aux, long r, long class_modulus) {
    if (class_modulus < 1 || aux.period < 1)
        throw std::invalid_argument("class_eliminated: bad modulus");
    std::vector<char> is_zero(aux.period, 0);
    for (long z : aux.zeros) is_zero[z] = 1;
    long l = std::lcm(class_modulus, aux.period);
    long rr = ((r % class_modulus) + class_modulus) % class_modulus;
    for (long n = rr; n < l; n += class_modulus)
        if (is_zero[n % aux.period]) return false;
    return true;
}

} // namespace pthue
