#include <doctest.h>

#include <pthue/companion.hpp>

#include <algorithm>
#include <vector>

using namespace pthue;

namespace {

// Oracle: c_n by the bare recurrence, no memoization, no ring arithmetic.
BigInt oracle_c(long n) {
    if (n >= 0) {
        BigInt a = 0, b = 0, c = 1;  // c_0, c_1, c_2
        if (n == 0) return a;
        if (n == 1) return b;
        for (long i = 2; i < n; ++i) {
            BigInt next = -3 * c - 3 * b + a;
            a = b;
            b = c;
            c = next;
        }
        return c;
    }
    BigInt a = 0, b = 0, c = 1;  // window (c_m, c_m+1, c_m+2) walking down
    for (long m = 0; m > n; --m) {
        BigInt prev = c + 3 * b + 3 * a;
        c = b;
        b = a;
        a = prev;
    }
    return a;
}

// Oracle for c_n mod q along an arithmetic progression.
bool progression_hits_zero(long q, long r, long step, long terms) {
    for (long t = -terms; t <= terms; ++t) {
        if (oracle_c(r + step * t) % q == 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("companion values, both directions") {
    CHECK(companion_value(0) == 0);
    CHECK(companion_value(1) == 0);
    CHECK(companion_value(2) == 1);
    CHECK(companion_value(3) == -3);
    CHECK(companion_value(4) == 6);
    CHECK(companion_value(5) == -8);
    CHECK(companion_value(10) == -279);
    CHECK(companion_value(11) == 217);
    CHECK(companion_value(20) == -286874);
    CHECK(companion_value(21) == 377952);
    CHECK(companion_value(-1) == 1);
    CHECK(companion_value(-2) == 3);
    for (long n = -25; n <= 40; ++n) CHECK(companion_value(n) == oracle_c(n));
}

TEST_CASE("c_n is the theta^2 coordinate of theta^n") {
    for (long n = -15; n <= 15; ++n) {
        ThetaCoords t = theta_power_coords(n);
        CHECK(t.z == companion_value(n));
    }
}

TEST_CASE("ring arithmetic is a power homomorphism") {
    ThetaCoords one = theta_power_coords(0);
    CHECK(one.x == 1);
    CHECK(one.y == 0);
    CHECK(one.z == 0);

    ThetaCoords theta = theta_power_coords(1);
    ThetaCoords theta_inv = theta_power_coords(-1);
    ThetaCoords prod = ring_mul(theta, theta_inv);
    CHECK(prod.x == 1);
    CHECK(prod.y == 0);
    CHECK(prod.z == 0);
    CHECK(theta_inv.x == 3);
    CHECK(theta_inv.y == 3);
    CHECK(theta_inv.z == 1);

    for (long m = -6; m <= 6; ++m) {
        for (long n = -6; n <= 6; ++n) {
            ThetaCoords lhs = theta_power_coords(m + n);
            ThetaCoords rhs = ring_mul(theta_power_coords(m), theta_power_coords(n));
            CHECK(lhs.x == rhs.x);
            CHECK(lhs.y == rhs.y);
            CHECK(lhs.z == rhs.z);
        }
    }
}

TEST_CASE("theta^3 = 1 - 3 theta - 3 theta^2 in coordinates") {
    ThetaCoords t3 = theta_power_coords(3);
    CHECK(t3.x == 1);
    CHECK(t3.y == -3);
    CHECK(t3.z == -3);
}

TEST_CASE("cycle mod 3: period 3, zeros {0, 1}") {
    auto aux = companion_cycle_mod(3, 1000000);
    REQUIRE(aux.has_value());
    CHECK(aux->q == 3);
    CHECK(aux->period == 3);
    CHECK(aux->zeros == std::vector<long>{0, 1});
}

TEST_CASE("cycle mod 109: period 108, zeros {0, 1, 36, 37, 72, 73}") {
    auto aux = companion_cycle_mod(109, 1000000);
    REQUIRE(aux.has_value());
    CHECK(aux->period == 108);
    CHECK(aux->zeros == std::vector<long>{0, 1, 36, 37, 72, 73});
    // oracle: direct big-integer scan over two periods
    for (long n = 0; n < 216; ++n) {
        bool zero = oracle_c(n) % 109 == 0;
        bool listed = std::binary_search(aux->zeros.begin(), aux->zeros.end(),
                                         n % aux->period);
        CHECK(zero == listed);
    }
}

TEST_CASE("periodicity is two-sided") {
    auto aux = companion_cycle_mod(109, 1000000);
    REQUIRE(aux.has_value());
    for (long n = -108; n < 0; ++n) {
        long r = ((n % aux->period) + aux->period) % aux->period;
        bool zero = oracle_c(n) % 109 == 0;
        bool listed = std::binary_search(aux->zeros.begin(), aux->zeros.end(), r);
        CHECK(zero == listed);
    }
}

TEST_CASE("cycle bails out when the period exceeds the cap") {
    CHECK_FALSE(companion_cycle_mod(7919, 10).has_value());
    CHECK_THROWS_AS(companion_cycle_mod(1, 100), std::invalid_argument);
}

TEST_CASE("class elimination mod 30") {
    auto aux3 = companion_cycle_mod(3, 1000000);
    auto aux109 = companion_cycle_mod(109, 1000000);
    REQUIRE(aux3.has_value());
    REQUIRE(aux109.has_value());

    // q = 3 eliminates 11 and 20 mod 30; q = 109 eliminates 10 and 21
    CHECK(class_eliminated(*aux3, 11, 30));
    CHECK(class_eliminated(*aux3, 20, 30));
    CHECK_FALSE(class_eliminated(*aux3, 10, 30));
    CHECK_FALSE(class_eliminated(*aux3, 21, 30));
    CHECK(class_eliminated(*aux109, 10, 30));
    CHECK(class_eliminated(*aux109, 21, 30));

    // classes holding real zeros can never be eliminated
    CHECK_FALSE(class_eliminated(*aux3, 0, 30));
    CHECK_FALSE(class_eliminated(*aux3, 1, 30));
    CHECK_FALSE(class_eliminated(*aux109, 0, 30));
    CHECK_FALSE(class_eliminated(*aux109, 1, 30));

    // oracle agreement over the joint period
    CHECK_FALSE(progression_hits_zero(109, 10, 30, 18));
    CHECK_FALSE(progression_hits_zero(109, 21, 30, 18));
    CHECK_FALSE(progression_hits_zero(3, 11, 30, 18));
    CHECK(progression_hits_zero(3, 10, 30, 18));

    CHECK_THROWS_AS(class_eliminated(*aux3, 0, 0), std::invalid_argument);
}
