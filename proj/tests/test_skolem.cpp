#include <doctest.h>

#include <pthue/errors.hpp>
#include <pthue/skolem.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

using namespace pthue;

namespace {

BigInt pow31(int k) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 31, static_cast<unsigned>(k));
    return m;
}

// Bare-recurrence oracle for c_n, independent of the companion module.
BigInt oracle_c(long n) {
    BigInt a = 0, b = 0, c = 1;
    if (n >= 0) {
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
    for (long m = 0; m > n; --m) {
        BigInt prev = c + 3 * b + 3 * a;
        c = b;
        b = a;
        a = prev;
    }
    return a;
}

BigInt mod_reduce(const BigInt& x, const BigInt& m) { return ((x % m) + m) % m; }

using SolutionSet = std::set<std::pair<long, long>>;

SolutionSet to_set(const std::vector<std::pair<BigInt, BigInt>>& v) {
    SolutionSet s;
    for (const auto& [x, y] : v) s.insert({x.get_si(), y.get_si()});
    return s;
}

// All (x, y) with 2x^3 - y^3 = norm in a box, by exhaustive scan.
SolutionSet brute_solutions(int norm, long box) {
    SolutionSet s;
    for (long x = -box; x <= box; ++x) {
        __int128 tx = static_cast<__int128>(2) * x * x * x;
        for (long y = -box; y <= box; ++y) {
            __int128 ty = static_cast<__int128>(y) * y * y;
            if (tx - ty == norm) s.insert({x, y});
        }
    }
    return s;
}

} // namespace

TEST_CASE("field constants") {
    CubicFieldData data = build_field_constants();
    CHECK(data.disc == -108);
    CHECK(data.unit_rank == 1);
    CHECK(data.f.degree() == 3);
    CHECK(data.f[0] == -1);
    // theta = 2^(1/3) - 1 = 0.2599...
    CHECK(data.theta.contained_in(frac(25, 100), frac(26, 100)));
    // theta^-1 = 3.8473...
    CHECK(data.theta_inv.contained_in(frac(3846, 1000), frac(3848, 1000)));
    CHECK(data.theta_inv.contained_in(frac(38473, 10000), frac(38474, 10000)));
}

TEST_CASE("fundamental unit certificate") {
    CubicFieldData data = build_field_constants();
    UnitCertificate cert = verify_fundamental_unit(data);
    CHECK(cert.fundamental);
    CHECK(cert.lower_bound_u_cubed == 20);
    CHECK(cert.cbrt20.strictly_above(frac(2714, 1000)));
    CHECK(cert.sqrt_theta_inv.strictly_below(cert.cbrt20));
    CHECK(cert.theta_inv_enclosure.contained_in(frac(3846, 1000),
                                                frac(3848, 1000)));
    CHECK_FALSE(cert.power_check.empty());
}

TEST_CASE("split data at p = 31, k = 6") {
    SplitData split = build_split_data(31, 6);
    CHECK(split.p == 31);
    CHECK(split.k == 6);
    CHECK(split.period == 30);
    CHECK(split.alpha.residue == BigInt("78741739"));
    CHECK(split.beta.residue == BigInt("452881269"));
    CHECK(split.gamma.residue == BigInt("355880670"));
    CHECK(split.alpha.residue % 31 == 3);
    CHECK(split.beta.residue % 31 == 6);
    CHECK(split.gamma.residue % 31 == 19);

    BigInt sum = mod_reduce(split.alpha.residue + split.beta.residue +
                                split.gamma.residue + 3,
                            pow31(6));
    CHECK(sum == 0);

    // perturbations have valuation exactly 1 (Fermat) and the pinned
    // residues mod 31^2
    for (const PadicInt* e : {&split.a, &split.b, &split.c}) {
        CHECK(e->valuation == 1);
        CHECK(e->valuation_exact());
    }
    CHECK(split.a.residue % 961 == 434);
    CHECK(split.b.residue % 961 == 806);
    CHECK(split.c.residue % 961 == 682);

    // oracle: root^30 - 1 mod 31^6 computed by plain modular exponentiation
    BigInt m = pow31(6);
    CHECK(split.a.residue == mod_reduce(mod_pow(split.alpha.residue, BigInt(30), m) - 1, m));
    CHECK(split.b.residue == mod_reduce(mod_pow(split.beta.residue, BigInt(30), m) - 1, m));
    CHECK(split.c.residue == mod_reduce(mod_pow(split.gamma.residue, BigInt(30), m) - 1, m));
}

TEST_CASE("build_split_data rejections") {
    CHECK_THROWS_AS(build_split_data(7, 6), std::invalid_argument);   // not split
    CHECK_THROWS_AS(build_split_data(3, 6), std::invalid_argument);   // divides disc
    CHECK_THROWS_AS(build_split_data(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_split_data(31, 1), std::invalid_argument);  // k out of range
    CHECK_THROWS_AS(build_split_data(31, 13), std::invalid_argument);
}

TEST_CASE("residue sieve finds the six classes the congruence allows") {
    SplitData split = build_split_data(31, 6);
    CompanionSequence seq;
    std::vector<long> surv = residue_sieve(split, seq);
    CHECK(surv == std::vector<long>{0, 1, 10, 11, 20, 21});

    // oracle: c_r mod 31 over a period by the bare recurrence
    std::vector<long> expect;
    for (long r = 0; r < 30; ++r)
        if (oracle_c(r) % 31 == 0) expect.push_back(r);
    CHECK(surv == expect);
}

TEST_CASE("lambda coefficients: lambda_0 is the p-adic image of c_r") {
    SplitData split = build_split_data(31, 6);
    BigInt m = pow31(6);
    for (long r : {0L, 1L, 10L, 11L, 20L, 21L}) {
        std::vector<PadicInt> lam = lambda_coefficients(split, r);
        REQUIRE(lam.size() == 8);
        CHECK(lam[0].residue == mod_reduce(oracle_c(r), m));
    }
}

TEST_CASE("lambda_1 residues and valuations for the zero classes") {
    SplitData split = build_split_data(31, 6);
    std::vector<PadicInt> lam0 = lambda_coefficients(split, 0);
    std::vector<PadicInt> lam1 = lambda_coefficients(split, 1);
    CHECK(lam0[0].residue == 0);
    CHECK(lam1[0].residue == 0);
    CHECK(lam0[1].valuation == 1);
    CHECK(lam1[1].valuation == 1);
    CHECK(lam0[1].residue % 961 == 620);
    CHECK(lam1[1].residue % 961 == 372);
}

TEST_CASE("the extra classes have v(lambda_0) = v(lambda_1) = 1") {
    SplitData split = build_split_data(31, 6);
    for (long r : {10L, 11L, 20L, 21L}) {
        std::vector<PadicInt> lam = lambda_coefficients(split, r);
        CHECK(lam[0].valuation == 1);
        CHECK(lam[1].valuation == 1);
    }
}

TEST_CASE("the class series interpolates the companion sequence") {
    // Evaluating sum_j lambda_j s^j at integer s must reproduce
    // c_{r + 30 s} mod 31^6: the whole interpolation chain against the bare
    // recurrence.
    SplitData split = build_split_data(31, 6);
    BigInt m = pow31(6);
    for (long r : {0L, 1L, 10L, 11L, 20L, 21L}) {
        std::vector<PadicInt> lam = lambda_coefficients(split, r);
        for (long s = -2; s <= 2; ++s) {
            PadicInt ps = PadicInt::from_integer(31, 6, BigInt(s));
            PadicInt acc = PadicInt::from_integer(31, 6, BigInt(0));
            for (size_t j = lam.size(); j-- > 0;)
                acc = padic_add(padic_mul(acc, ps), lam[j]);
            CHECK(acc.residue == mod_reduce(oracle_c(r + 30 * s), m));
        }
    }
}

TEST_CASE("lambda profiles give Strassman bound 1 on the zero classes") {
    SplitData split = build_split_data(31, 6);
    for (long r : {0L, 1L}) {
        ValuationProfile prof = lambda_profile(split, r);
        REQUIRE(!prof.entries.empty());
        CHECK(prof.entries[0].kind == ValuationEntry::Kind::zero);
        CHECK(prof.entries[1].kind == ValuationEntry::Kind::exact);
        CHECK(prof.entries[1].valuation == 1);
        CHECK(prof.tail.has_value());
        CHECK(strassman_bound(prof) == 1);
        CHECK(count_exact_roots(prof, 1) == RootVerdict::exact);
    }
    for (long r : {10L, 11L, 20L, 21L}) {
        ValuationProfile prof = lambda_profile(split, r);
        CHECK(prof.entries[0].kind == ValuationEntry::Kind::exact);
        CHECK(prof.entries[0].valuation == 1);
        CHECK(strassman_bound(prof) == 1);
    }
}

TEST_CASE("solve_thue(+1) end to end") {
    ThueCertificate cert = solve_thue(1);
    CHECK(cert.norm == 1);
    CHECK(cert.p == 31);
    CHECK(cert.k == 6);
    CHECK(cert.surviving == std::vector<long>{0, 1, 10, 11, 20, 21});
    CHECK(cert.zero_set == std::vector<long>{0, 1});
    CHECK(to_set(cert.solutions) == SolutionSet{{0, -1}, {1, 1}});
    CHECK(to_set(cert.positive_solutions) == SolutionSet{{1, 1}});

    REQUIRE(cert.classes.size() == 6);
    for (const ClassAnalysis& cls : cert.classes) {
        if (cls.r == 0 || cls.r == 1) {
            CHECK(cls.verdict == RootVerdict::exact);
            CHECK(cls.known_zero_s == std::vector<long>{0});
            CHECK_FALSE(cls.eliminated_by_q.has_value());
        } else {
            REQUIRE(cls.eliminated_by_q.has_value());
            long q = (cls.r == 11 || cls.r == 20) ? 3 : 109;
            CHECK(*cls.eliminated_by_q == q);
        }
    }
}

TEST_CASE("solve_thue(-1) end to end") {
    ThueCertificate cert = solve_thue(-1);
    CHECK(to_set(cert.solutions) == SolutionSet{{0, 1}, {-1, -1}});
    CHECK(cert.positive_solutions.empty());
}

TEST_CASE("certified solutions agree with brute force in a box") {
    SolutionSet plus = brute_solutions(1, 300);
    SolutionSet minus = brute_solutions(-1, 300);
    CHECK(plus == to_set(solve_thue(1).solutions));
    CHECK(minus == to_set(solve_thue(-1).solutions));
}

TEST_CASE("certificate document shape and determinism") {
    ThueCertificate cert = solve_thue(1);
    const auto& doc = cert.doc;
    CHECK(doc["schema"] == "padic-thue/1");
    CHECK(doc["prime"] == 31);
    CHECK(doc["precision"] == 6);
    REQUIRE(doc.contains("checks"));
    REQUIRE(doc.contains("divergences_from_paper"));

    bool found_disc = false;
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
        if (c["name"] == "discriminant") {
            found_disc = true;
            CHECK(c["value"] == "-108");
            CHECK(c["status"] == "pass");
        }
        CHECK(c["status"] != "fail");
    }
    CHECK(found_disc);
    CHECK_FALSE(doc["divergences_from_paper"].empty());

    ThueCertificate again = solve_thue(1);
    CHECK(cert.doc.dump() == again.doc.dump());
}

TEST_CASE("solve_thue rejects unusable inputs") {
    CHECK_THROWS_AS(solve_thue(5), std::invalid_argument);
    CHECK_THROWS_AS(solve_thue(1, 7, 6), std::invalid_argument);
}
