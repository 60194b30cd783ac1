#pragma once

#include "pthue/skolem.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace pthue {

// Set of distinct positive integers where every 3-element product plus one
// is a perfect cube.
struct P31Set {
    std::vector<BigInt> elements;  // sorted, distinct, all >= 1

    static P31Set from(std::vector<BigInt> xs);
};

struct TripleFailure {
    BigInt xi, xj, xk;
    BigInt product_plus_one;
};

struct ValidationResult {
    bool valid = false;
    std::optional<TripleFailure> first_failure;
};

// Checks every 3-subset; needs at least 3 elements.
ValidationResult validate_p31(const P31Set& s);

// {a-1, a+1, a^4+a^2+1} for a >= 2; the triple product plus one is (a^2)^3.
P31Set family_claim1(const BigInt& a);

// {a, b, a^2 b^2 + 3ab + 3} for 1 <= a < b; product plus one is (ab+1)^3.
P31Set family_claim2(const BigInt& a, const BigInt& b);

struct PairFailure {
    BigInt xi, xj;
    BigInt product_plus_one;
};

struct ExtensionCheck {
    bool extends = false;
    std::optional<PairFailure> first_failure;
};

// True iff s united with y is still a P31 set, i.e. every pair from s gives
// a cube with y.  y must not be a member.
ExtensionCheck check_extension(const P31Set& s, const BigInt& y);

struct ExtensionReport {
    P31Set base;
    BigInt bound;
    std::vector<BigInt> survivors;
    // First failing pair per failed candidate, in candidate order; retained
    // up to a fixed cap so million-candidate scans stay bounded.
    std::vector<std::pair<BigInt, PairFailure>> failures;
    bool failures_truncated = false;
    long long candidates_checked = 0;
};

// Scans y in [1, bound] outside s; survivors are the y that extend s.
ExtensionReport search_extensions(const P31Set& s, const BigInt& bound);

// Corollary record: adjoining d to {1, 2, 13} forces 2d+1 = u^3,
// 13d+1 = v^3, 26d+1 = w^3, hence 2v^3 - w^3 = 1, hence (v, w) = (1, 1) by
// the certificate, hence d = 0: no positive d works.  The argument is
// uniform in d, so the conclusion covers every candidate, not only d > 13.
nlohmann::ordered_json prove_nonextendible(const ThueCertificate& thue_plus);

// T_n = n(n+1)/2.
BigInt triangular(const BigInt& n);

// All n in [1, bound] with T_n a perfect cube.
std::vector<BigInt> search_cubic_triangular(const BigInt& bound);

// Uniqueness of n = 1: with n, n+1 coprime and n(n+1)/2 = m^3, the odd case
// (n = y^3, n+1 = 2x^3) needs 2x^3 - y^3 = 1 and the even case (n = 2x^3,
// n+1 = y^3) needs 2x^3 - y^3 = -1; both solution sets come from the
// certificates.
nlohmann::ordered_json reduce_cubic_triangular(const ThueCertificate& thue_plus,
                                               const ThueCertificate& thue_minus);

} // namespace pthue
