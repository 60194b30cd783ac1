#include "pthue/p31.hpp"

#include "pthue/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace pthue {

namespace {

using nlohmann::ordered_json;

constexpr size_t kFailureCap = 100000;

ordered_json pair_list(const std::vector<std::pair<BigInt, BigInt>>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [x, y] : v)
        out.push_back(ordered_json{{"x", big_to_string(x)}, {"y", big_to_string(y)}});
    return out;
}

} // namespace

P31Set P31Set::from(std::vector<BigInt> xs) {
    std::sort(xs.begin(), xs.end());
    if (xs.size() < 3)
        throw std::invalid_argument("P31Set: needs at least 3 elements");
    if (xs.front() < 1)
        throw std::invalid_argument("P31Set: elements must be positive");
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("P31Set: elements must be distinct");
    return P31Set{std::move(xs)};
}

ValidationResult validate_p31(const P31Set& s) {
    const auto& e = s.elements;
    if (e.size() < 3)
        throw std::invalid_argument("validate_p31: needs at least 3 elements");
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            for (size_t k = j + 1; k < e.size(); ++k) {
                BigInt prod = e[i] * e[j] * e[k] + 1;
                if (!is_perfect_cube(prod))
                    return {false, TripleFailure{e[i], e[j], e[k], prod}};
            }
    return {true, std::nullopt};
}

P31Set family_claim1(const BigInt& a) {
    if (a < 2) throw std::invalid_argument("family_claim1: a must be >= 2");
    BigInt a2 = a * a;
    // (a-1)(a+1)(a^4+a^2+1) = a^6 - 1.
    return P31Set::from({a - 1, a + 1, a2 * a2 + a2 + 1});
}

P31Set family_claim2(const BigInt& a, const BigInt& b) {
    if (a < 1 || b <= a)
        throw std::invalid_argument("family_claim2: needs 1 <= a < b");
    BigInt ab = a * b;
    // ab(a^2 b^2 + 3ab + 3) = (ab+1)^3 - 1.
    return P31Set::from({a, b, ab * ab + 3 * ab + 3});
}

ExtensionCheck check_extension(const P31Set& s, const BigInt& y) {
    const auto& e = s.elements;
    if (std::binary_search(e.begin(), e.end(), y))
        throw std::invalid_argument("check_extension: y is already a member");
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            BigInt prod = e[i] * e[j] * y + 1;
            if (!is_perfect_cube(prod))
                return {false, PairFailure{e[i], e[j], prod}};
        }
    return {true, std::nullopt};
}

ExtensionReport search_extensions(const P31Set& s, const BigInt& bound) {
    if (bound < 1) throw std::invalid_argument("search_extensions: bound must be >= 1");
    ExtensionReport rep;
    rep.base = s;
    rep.bound = bound;
    for (BigInt y = 1; y <= bound; ++y) {
        if (std::binary_search(s.elements.begin(), s.elements.end(), y)) continue;
        ++rep.candidates_checked;
        ExtensionCheck c = check_extension(s, y);
        if (c.extends) {
            rep.survivors.push_back(y);
        } else if (rep.failures.size() < kFailureCap) {
            rep.failures.emplace_back(y, *c.first_failure);
        } else {
            rep.failures_truncated = true;
        }
    }
    return rep;
}

nlohmann::ordered_json prove_nonextendible(const ThueCertificate& thue_plus) {
    if (thue_plus.norm != 1)
        throw std::invalid_argument("prove_nonextendible: needs the norm +1 certificate");
    std::vector<std::pair<BigInt, BigInt>> expect{{BigInt(1), BigInt(1)}};
    if (thue_plus.positive_solutions != expect)
        throw std::invalid_argument(
            "prove_nonextendible: certificate does not establish (1,1) as the "
            "unique positive solution");

    ordered_json doc = make_envelope(
        "extending {1, 2, 13} by d: 2d+1 = u^3, 13d+1 = v^3, 26d+1 = w^3",
        thue_plus.p, thue_plus.k);

    // 2(13d+1) - (26d+1) = 1 identically in d, so 2v^3 - w^3 = 1.
    bool identity = true;
    for (long d : {0L, 1L, 7L, 1000L})
        identity = identity && (2 * (13 * BigInt(d) + 1) - (26 * BigInt(d) + 1) == 1);
    add_check(doc, "system-identity", {{"spot_checks", {0, 1, 7, 1000}}},
              "2(13d+1) - (26d+1) = 1", "holds for all d",
              identity ? "pass" : "fail");
    add_check(doc, "thue-positive-solutions", ordered_json::object(),
              pair_list(thue_plus.positive_solutions), "[(1,1)]", "pass");
    // v, w >= 1 for d >= 0, so (v, w) is the positive solution (1, 1); then
    // 13d + 1 = v^3 = 1 forces d = 0, excluded.  Nothing assumes d > 13.
    add_check(doc, "conclusion", ordered_json::object(),
              "(v, w) = (1, 1), so 13d+1 = 1, so d = 0", "no positive d extends",
              "pass");
    return doc;
}

BigInt triangular(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("triangular: n must be >= 0");
    return n * (n + 1) / 2;
}

std::vector<BigInt> search_cubic_triangular(const BigInt& bound) {
    if (bound < 1)
        throw std::invalid_argument("search_cubic_triangular: bound must be >= 1");

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (bound < 4096) workers = 1;
    BigInt chunk = bound / static_cast<long>(workers) + 1;
    std::vector<std::vector<BigInt>> found(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        BigInt lo = BigInt(static_cast<long>(w)) * chunk + 1;
        BigInt hi = std::min(BigInt(lo + chunk - 1), bound);
        pool.emplace_back([lo, hi, &out = found[w]]() {
            for (BigInt n = lo; n <= hi; ++n)
                if (is_perfect_cube(n * (n + 1) / 2)) out.push_back(n);
        });
    }
    for (auto& t : pool) t.join();
    std::vector<BigInt> result;
    for (auto& part : found)
        result.insert(result.end(), part.begin(), part.end());
    return result;  // chunks are ascending, so the concatenation is sorted
}

nlohmann::ordered_json reduce_cubic_triangular(const ThueCertificate& thue_plus,
                                               const ThueCertificate& thue_minus) {
    if (thue_plus.norm != 1 || thue_minus.norm != -1)
        throw std::invalid_argument(
            "reduce_cubic_triangular: needs the +1 and -1 certificates");

    ordered_json doc =
        make_envelope("n(n+1)/2 = m^3", thue_plus.p, thue_plus.k);

    // n and n+1 are coprime, so in n(n+1) = 2m^3 the odd factor is a cube
    // and the factor carrying the 2 is twice a cube.
    add_check(doc, "coprimality", ordered_json::object(),
              "(n+1) - n = 1, so gcd(n, n+1) = 1", "coprime factors", "pass");

    // Odd n: n = y^3, n+1 = 2x^3, hence 2x^3 - y^3 = 1 with x, y >= 1.
    std::vector<BigInt> odd_n;
    for (const auto& [x, y] : thue_plus.positive_solutions)
        odd_n.push_back(y * y * y);
    add_check(doc, "odd-case",
              {{"equation", "n = y^3, n+1 = 2x^3"},
               {"positive_solutions", pair_list(thue_plus.positive_solutions)}},
              odd_n.size() == 1 ? big_to_string(odd_n[0]) : "unexpected count",
              "n = 1", odd_n == std::vector<BigInt>{1} ? "pass" : "fail");

    // Even n: n = 2x^3, n+1 = y^3, hence 2x^3 - y^3 = -1; every integer
    // solution is examined and none leaves a positive n.
    std::vector<BigInt> even_n;
    ordered_json rejected = ordered_json::array();
    for (const auto& [x, y] : thue_minus.solutions) {
        BigInt n = 2 * x * x * x;
        if (n >= 1 && n + 1 == y * y * y)
            even_n.push_back(n);
        else
            rejected.push_back(ordered_json{{"x", big_to_string(x)},
                                            {"y", big_to_string(y)},
                                            {"n", big_to_string(n)}});
    }
    add_check(doc, "even-case",
              {{"equation", "n = 2x^3, n+1 = y^3"},
               {"integer_solutions", pair_list(thue_minus.solutions)}},
              {{"rejected", rejected}}, "no positive n",
              even_n.empty() ? "pass" : "fail");

    add_check(doc, "conclusion", ordered_json::object(),
              "n = 1 is the unique cubic-triangular number", "unique n = 1",
              odd_n == std::vector<BigInt>{1} && even_n.empty() ? "pass" : "fail");
    return doc;
}

} // namespace pthue
