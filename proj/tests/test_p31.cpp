#include <doctest.h>

#include <pthue/p31.hpp>

#include <vector>

using namespace pthue;
using nlohmann::ordered_json;

namespace {

bool all_checks_pass(const ordered_json& doc) {
    for (const auto& c : doc["checks"])
        if (c["status"] != "pass") return false;
    return !doc["checks"].empty();
}

bool has_check(const ordered_json& doc, const std::string& name) {
    for (const auto& c : doc["checks"])
        if (c["name"] == name) return true;
    return false;
}

} // namespace

TEST_CASE("P31Set construction") {
    P31Set s = P31Set::from({BigInt(13), BigInt(1), BigInt(2)});
    CHECK(s.elements == std::vector<BigInt>{1, 2, 13});
    CHECK_THROWS_AS(P31Set::from({BigInt(1), BigInt(2)}), std::invalid_argument);
    CHECK_THROWS_AS(P31Set::from({BigInt(0), BigInt(1), BigInt(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(P31Set::from({BigInt(1), BigInt(2), BigInt(2)}),
                    std::invalid_argument);
}

TEST_CASE("{1, 2, 13} is a P31-set") {
    ValidationResult res = validate_p31(P31Set::from({BigInt(1), BigInt(2), BigInt(13)}));
    CHECK(res.valid);
    CHECK_FALSE(res.first_failure.has_value());
}

TEST_CASE("{1, 2, 3} is not, and the witness triple is reported") {
    ValidationResult res = validate_p31(P31Set::from({BigInt(1), BigInt(2), BigInt(3)}));
    CHECK_FALSE(res.valid);
    REQUIRE(res.first_failure.has_value());
    CHECK(res.first_failure->product_plus_one == 7);
}

TEST_CASE("four-element sets check every triple") {
    // {1, 2, 13, y}: each triple must give a cube, so a wrong y fails on a
    // pair even if {1, 2, 13} itself passes
    P31Set s = P31Set::from({BigInt(1), BigInt(2), BigInt(13), BigInt(20)});
    ValidationResult res = validate_p31(s);
    CHECK_FALSE(res.valid);
}

TEST_CASE("family claim 1: {a-1, a+1, a^4+a^2+1}") {
    for (long a = 2; a <= 120; ++a) {
        P31Set s = family_claim1(BigInt(a));
        REQUIRE(s.elements.size() == 3);
        ValidationResult res = validate_p31(s);
        CHECK(res.valid);
        // the cube is (a^2)^3 exactly
        BigInt prod = s.elements[0] * s.elements[1] * s.elements[2] + 1;
        BigInt a2 = BigInt(a) * a;
        CHECK(prod == a2 * a2 * a2);
    }
    CHECK_THROWS_AS(family_claim1(BigInt(1)), std::invalid_argument);
}

TEST_CASE("family claim 2: {a, b, a^2 b^2 + 3ab + 3}") {
    for (long a = 1; a <= 25; ++a) {
        for (long b = a + 1; b <= 25; ++b) {
            P31Set s = family_claim2(BigInt(a), BigInt(b));
            ValidationResult res = validate_p31(s);
            CHECK(res.valid);
            BigInt prod = s.elements[0] * s.elements[1] * s.elements[2] + 1;
            BigInt ab1 = BigInt(a) * b + 1;
            CHECK(prod == ab1 * ab1 * ab1);
        }
    }
    CHECK_THROWS_AS(family_claim2(BigInt(3), BigInt(3)), std::invalid_argument);
    CHECK_THROWS_AS(family_claim2(BigInt(0), BigInt(5)), std::invalid_argument);
}

TEST_CASE("check_extension") {
    P31Set s = P31Set::from({BigInt(1), BigInt(2), BigInt(13)});
    // d must make 2d+1, 13d+1, 26d+1 all cubes; no small d does
    for (long y = 3; y <= 100; ++y) {
        if (y == 13) continue;
        ExtensionCheck c = check_extension(s, BigInt(y));
        CHECK_FALSE(c.extends);
        CHECK(c.first_failure.has_value());
    }
    CHECK_THROWS_AS(check_extension(s, BigInt(2)), std::invalid_argument);
}

TEST_CASE("search_extensions on {1, 2, 13}") {
    P31Set s = P31Set::from({BigInt(1), BigInt(2), BigInt(13)});
    ExtensionReport rep = search_extensions(s, BigInt(5000));
    CHECK(rep.survivors.empty());
    CHECK(rep.candidates_checked == 4997);  // 5000 minus the three members
    CHECK_FALSE(rep.failures.empty());
    CHECK_THROWS_AS(search_extensions(s, BigInt(0)), std::invalid_argument);
}

TEST_CASE("extension failures carry a concrete witness pair") {
    P31Set s = P31Set::from({BigInt(1), BigInt(2), BigInt(13)});
    ExtensionReport rep = search_extensions(s, BigInt(10));
    CHECK(rep.survivors.empty());
    REQUIRE_FALSE(rep.failures.empty());
    // y = 3 is the first candidate outside the set; its first failing pair
    // is (1, 2): 1*2*3 + 1 = 7 is not a cube
    const auto& [y, fail] = rep.failures.front();
    CHECK(y == 3);
    CHECK(fail.xi == 1);
    CHECK(fail.xj == 2);
    CHECK(fail.product_plus_one == 7);
    CHECK_FALSE(rep.failures_truncated);
}

TEST_CASE("prove_nonextendible produces a complete passing record") {
    ThueCertificate plus = solve_thue(1);
    ordered_json doc = prove_nonextendible(plus);
    CHECK(doc["schema"] == "padic-thue/1");
    CHECK(all_checks_pass(doc));
    CHECK(has_check(doc, "system-identity"));
    CHECK(has_check(doc, "thue-positive-solutions"));
    CHECK(has_check(doc, "conclusion"));

    ThueCertificate minus = solve_thue(-1);
    CHECK_THROWS_AS(prove_nonextendible(minus), std::invalid_argument);
}

TEST_CASE("triangular numbers") {
    CHECK(triangular(BigInt(0)) == 0);
    CHECK(triangular(BigInt(1)) == 1);
    CHECK(triangular(BigInt(3)) == 6);
    CHECK(triangular(BigInt(100)) == 5050);
    CHECK_THROWS_AS(triangular(BigInt(-1)), std::invalid_argument);
}

TEST_CASE("search_cubic_triangular finds exactly n = 1 below 10^4") {
    std::vector<BigInt> hits = search_cubic_triangular(BigInt(10000));
    CHECK(hits == std::vector<BigInt>{1});

    // oracle: mpz_root-based direct scan
    std::vector<BigInt> expect;
    for (long n = 1; n <= 10000; ++n) {
        BigInt t = BigInt(n) * (n + 1) / 2;
        BigInt r;
        if (mpz_root(r.get_mpz_t(), t.get_mpz_t(), 3)) expect.push_back(n);
    }
    CHECK(hits == expect);
    CHECK_THROWS_AS(search_cubic_triangular(BigInt(0)), std::invalid_argument);
}

TEST_CASE("search_cubic_triangular is deterministic across thread splits") {
    std::vector<BigInt> a = search_cubic_triangular(BigInt(9000));
    std::vector<BigInt> b = search_cubic_triangular(BigInt(9000));
    CHECK(a == b);
    CHECK(search_cubic_triangular(BigInt(100)) == std::vector<BigInt>{1});
}

TEST_CASE("reduce_cubic_triangular covers both parity cases") {
    ThueCertificate plus = solve_thue(1);
    ThueCertificate minus = solve_thue(-1);
    ordered_json doc = reduce_cubic_triangular(plus, minus);
    CHECK(doc["schema"] == "padic-thue/1");
    CHECK(all_checks_pass(doc));
    CHECK(has_check(doc, "coprimality"));
    CHECK(has_check(doc, "odd-case"));
    CHECK(has_check(doc, "even-case"));
    CHECK(has_check(doc, "conclusion"));

    CHECK_THROWS_AS(reduce_cubic_triangular(minus, plus), std::invalid_argument);
}
