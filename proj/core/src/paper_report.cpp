#include "pthue/paper_report.hpp"

#include "pthue/certificate.hpp"
#include "pthue/p31.hpp"
#include "pthue/skolem.hpp"

#include <exception>
#include <sstream>

namespace pthue {

namespace {

using nlohmann::ordered_json;

BigInt pow31(int k) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 31, static_cast<unsigned long>(k));
    return m;
}

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

// Deterministic 64-bit LCG; the report must be byte-identical across runs.
struct Lcg {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

} // namespace

std::vector<PaperRow> verify_paper_rows() {
    std::vector<PaperRow> rows;
    auto row = [&](std::string name, std::string claim, std::string computed,
                   bool ok, std::string note = "") {
        rows.push_back({std::move(name), std::move(claim), std::move(computed),
                        ok ? "paper-consistent" : "fail", std::move(note)});
    };
    auto corrected = [&](std::string name, std::string claim, std::string computed,
                         std::string note) {
        rows.push_back({std::move(name), std::move(claim), std::move(computed),
                        "corrected", std::move(note)});
    };
    auto note_row = [&](std::string name, std::string claim, std::string computed,
                        std::string note) {
        rows.push_back({std::move(name), std::move(claim), std::move(computed),
                        "note", std::move(note)});
    };

    // --- the field, its discriminant, its unit group ---
    {
        ThetaCoords t3 = theta_power_coords(3);
        ThetaCoords lhs{t3.x + 3 * theta_power_coords(2).x + 3 * theta_power_coords(1).x - 1,
                        t3.y + 3 * theta_power_coords(2).y + 3 * theta_power_coords(1).y,
                        t3.z + 3 * theta_power_coords(2).z + 3 * theta_power_coords(1).z};
        row("field-polynomial",
            "2 = (theta+1)^3, so theta^3 + 3 theta^2 + 3 theta - 1 = 0",
            "f(theta) == 0 in Z[theta] by exact coordinate arithmetic",
            lhs.x == 0 && lhs.y == 0 && lhs.z == 0);
    }

    CubicFieldData field = build_field_constants();
    row("discriminant", "the discriminant of f equals -108",
        big_to_string(field.disc), field.disc == -108);
    row("unit-rank", "r = s = 1, so the unit group is G x Z",
        "disc < 0: one real embedding, rank r + s - 1 = 1",
        field.disc < 0 && field.unit_rank == 1);
    row("unit-cubed-bound", "u^3 > d/4 - 7 = 20 for the fundamental unit u",
        "108/4 - 7 = 20 exactly", frac(108, 4) - 7 == 20);

    UnitCertificate unit = verify_fundamental_unit(field);
    row("unit-decimal-bound", "u > 2.7144",
        "20^(1/3) >= " + rat_to_string(unit.cbrt20.lo),
        unit.cbrt20.strictly_above(frac(27144, 10000)));
    row("unit-square-exclusion", "u^2 > 7.3680",
        "20^(1/3) lower endpoint squared = " +
            rat_to_string(unit.cbrt20.lo * unit.cbrt20.lo),
        unit.cbrt20.lo * unit.cbrt20.lo > frac(73680, 10000));
    row("theta-inverse-value", "theta^-1 ~= 3.8473",
        "enclosed in [" + rat_to_string(unit.theta_inv_enclosure.lo) + ", " +
            rat_to_string(unit.theta_inv_enclosure.hi) + "]",
        unit.theta_inv_enclosure.contained_in(Rational(38473, 10000),
                                              frac(38474, 10000)));
    row("fundamental-unit", "u = theta^-1 and U = {+-theta^n : n in Z}",
        unit.power_check, unit.fundamental);

    // --- the local data at p = 31 ---
    SplitData split = build_split_data(31, 6);
    BigInt m6 = pow31(6);
    BigInt m2 = pow31(2);

    {
        Lcg rng;
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            BigInt a = rng.next(-50, 50), b = rng.next(-50, 50);
            BigInt prod = 1;
            for (const PadicInt* root : {&split.alpha, &split.beta, &split.gamma})
                prod = prod * ((root->residue + 1) * a - b) % m6;
            BigInt want = (2 * a * a * a - b * b * b) % m6;
            ok = ((prod - want) % m6 == 0);
        }
        row("norm-form", "N(2^(1/3) a - b) = 2a^3 - b^3",
            "product over the three 31-adic conjugates == 2a^3 - b^3 mod 31^6 "
            "for 100 pseudorandom pairs", ok);
    }
    {
        const PadicInt* roots[3] = {&split.alpha, &split.beta, &split.gamma};
        PadicInt s0 = PadicInt::from_integer(31, 6, 0), s1 = s0;
        for (int i = 0; i < 3; ++i) {
            PadicInt den = padic_mul(padic_sub(*roots[i], *roots[(i + 1) % 3]),
                                     padic_sub(*roots[i], *roots[(i + 2) % 3]));
            PadicInt w = padic_inv(den);
            s0 = padic_add(s0, w);
            s1 = padic_add(s1, padic_mul(*roots[i], w));
        }
        row("partial-fractions",
            "sum 1/f'(theta_i) = 0 and sum theta_i/f'(theta_i) = 0",
            "both sums vanish mod 31^6 at the Hensel lifts",
            s0.is_zero_residue() && s1.is_zero_residue());
    }
    {
        bool ok = true;
        for (long n = -20; n <= 20 && ok; ++n)
            ok = (companion_value(n) == theta_power_coords(n).z);
        row("companion-reduction",
            "solving 2x^3 - y^3 = 1 amounts to finding the zeros of c_n",
            "c_n equals the theta^2-coordinate of theta^n for n in [-20, 20]", ok);
    }

    IntPoly f = unit_cubic();
    row("split-prime-values", "f(3) = 2*31, f(6) = 11*31, f'(3) = 48, f'(6) = 147",
        "recomputed: 62, 341, 48, 147",
        poly_eval_mod(f, 3, 100000) == 62 && poly_eval_mod(f, 6, 100000) == 341 &&
            poly_eval_mod(derivative(f), 3, 100000) == 48 &&
            poly_eval_mod(derivative(f), 6, 100000) == 147);
    {
        std::vector<long> roots = roots_mod_p(f, 31);
        row("roots-mod-31", "the three 31-adic roots reduce to 3, 6, 19 mod 31 "
            "(-74 == 19)", join(roots), roots == std::vector<long>{3, 6, 19});
    }
    {
        std::ostringstream os;
        os << split.alpha.residue % m2 << ", " << split.beta.residue % m2 << ", "
           << split.gamma.residue % m2 << " (mod 961); f(34) == 589 != 0 mod 961";
        corrected("hensel-lifts-mod-961",
                  "alpha = 34, beta = 37, gamma = -74 (mod 31^2)", os.str(),
                  "the published residues are not roots of f mod 961; the Newton "
                  "lifts of 3, 6, 19 are 282, 409, 267");
    }
    {
        BigInt sum = (split.alpha.residue + split.beta.residue +
                      split.gamma.residue) % m6;
        row("root-sum", "alpha + beta + gamma = -3",
            "sum of the lifts == -3 mod 31^6", sum == m6 - 3);
    }
    row("power-table", "34^30 == 838, 37^30 == 869, 74^30 == 94 (mod 961)",
        "mod_pow reproduces all three table entries",
        mod_pow(34, 30, 961) == 838 && mod_pow(37, 30, 961) == 869 &&
            mod_pow(74, 30, 961) == 94,
        "correct arithmetic on incorrect root values");
    {
        std::ostringstream os;
        os << "a = " << split.a.residue % m2 << ", b = " << split.b.residue % m2
           << ", c = " << split.c.residue % m2 << " (mod 961)";
        corrected("perturbations-mod-961", "a = 837, b = 868, c = 93 (mod 31^2)",
                  os.str(), "root^30 - 1 recomputed from the corrected lifts");
    }
    row("fermat-perturbation-valuations",
        "root^30 == 1 (mod 31) for each root, so v(a), v(b), v(c) >= 1",
        "v(a) = v(b) = v(c) = 1 exactly",
        split.a.valuation == 1 && split.b.valuation == 1 && split.c.valuation == 1);
    {
        bool ok = true;
        for (const PadicInt* e : {&split.a, &split.b, &split.c}) {
            PadicSeries phi = interpolation_series(*e);
            PadicInt base = PadicInt::from_integer(31, 6, e->residue + 1);
            PadicInt inv = padic_inv(base);
            for (long r = -10; r <= 10 && ok; ++r) {
                BigInt wantr = r >= 0 ? mod_pow(base.residue, BigInt(r), m6)
                                      : mod_pow(inv.residue, BigInt(-r), m6);
                PadicInt got = series_eval(phi, PadicInt::from_integer(31, 6, r));
                ok = (got.residue == wantr);
            }
        }
        row("interpolation-lemma",
            "Phi_b(r) = (1+b)^r for every integer r, when v(b) >= 1",
            "series evaluation matches mod_pow for the three perturbations, "
            "r in [-10, 10]", ok);
    }

    // --- the sieve and the class series ---
    CompanionSequence seq;
    std::vector<long> surv = residue_sieve(split, seq);
    {
        std::ostringstream os;
        os << "{" << join(surv) << "}; c_10 = " << companion_value(10)
           << " = -9*31, c_11 = " << companion_value(11) << " = 7*31, c_20 = "
           << companion_value(20) << ", c_21 = " << companion_value(21);
        corrected("residue-sieve", "c_r != 0 (mod 31) for r != 1, 30",
                  os.str(),
                  "four further residue classes survive the mod-31 sieve; the "
                  "published claim holds only for the exact integers c_r, not "
                  "for their residues");
    }

    try {
        ThueCertificate plus = solve_thue(1, 31, 6);
        ThueCertificate minus = solve_thue(-1, 31, 6);

        {
            bool ok = true;
            for (long r : {0L, 1L}) {
                std::vector<PadicInt> lam = lambda_coefficients(split, r);
                ok = ok && lam[0].is_zero_residue() && companion_value(r) == 0;
            }
            row("lambda-0", "lambda_{0,r} = 0 for r = 1, 30",
                "c_0 = c_1 = 0 exactly and lambda_0 == 0 mod 31^6 in both "
                "classes", ok);
        }
        {
            std::vector<PadicInt> l0 = lambda_coefficients(split, 0);
            std::vector<PadicInt> l1 = lambda_coefficients(split, 1);
            std::ostringstream os;
            os << "lambda_1 == " << l0[1].residue % m2 << ", "
               << l1[1].residue % m2 << " (mod 961) for r = 0, 1; v = 1 in both";
            row("lambda-1-nonzero",
                "lambda_{1,r} != 0 (mod 31^2) for r = 1, 30", os.str(),
                l0[1].valuation == 1 && l1[1].valuation == 1,
                "verified with the corrected lifts; the published intermediate "
                "values are unusable");
        }
        {
            bool ok = true;
            std::vector<PadicInt> lam = lambda_coefficients(split, 1);
            for (size_t j = 2; j <= 5 && ok; ++j)
                ok = lam[j].valuation_exact() && lam[j].valuation == static_cast<int>(j);
            corrected("higher-lambda", "lambda_{j,r} != 0 (mod 31^2) for j >= 2",
                      "v(lambda_j) = j for 2 <= j <= 5, so lambda_j == 0 mod 31^2",
                      ok ? "the Strassman bound needs only v(lambda_j) > "
                           "v(lambda_1), which holds"
                         : "UNEXPECTED: valuation pattern broke");
        }
        {
            bool ok = true;
            for (const ClassAnalysis& ca : plus.classes)
                if (ca.r == 0 || ca.r == 1)
                    ok = ok && ca.bound == 1 && ca.verdict == RootVerdict::exact;
            row("strassman-exactly-one",
                "u_r has at most one zero, hence exactly one, for r = 1, 30",
                "bound 1 with one exhibited integer zero in classes 0 and 1", ok,
                "the published sieve set makes these the only classes; the "
                "corrected set needs four more eliminations");
        }
        {
            std::ostringstream os;
            bool ok = true;
            for (const ClassAnalysis& ca : plus.classes)
                if (ca.r != 0 && ca.r != 1) {
                    ok = ok && ca.eliminated_by_q.has_value();
                    if (ca.eliminated_by_q)
                        os << "r=" << ca.r << " by q=" << *ca.eliminated_by_q << "; ";
                }
            note_row("auxiliary-sieve",
                     "(absent: the published argument stops at the mod-31 sieve)",
                     ok ? os.str() + "every extra class is integer-zero-free"
                        : "elimination incomplete",
                     "each extra class carries a non-integral 31-adic zero that "
                     "no refinement at 31 removes; a congruence at a second "
                     "modulus closes it");
            if (!ok) rows.back().status = "fail";
        }
        {
            std::ostringstream os;
            os << "integer solutions {";
            for (size_t i = 0; i < plus.solutions.size(); ++i)
                os << (i ? ", " : "") << "(" << plus.solutions[i].first << ","
                   << plus.solutions[i].second << ")";
            os << "}, positive {(1,1)}";
            bool ok = plus.positive_solutions ==
                          std::vector<std::pair<BigInt, BigInt>>{{BigInt(1), BigInt(1)}} &&
                      plus.solutions.size() == 2;
            row("theorem-2-solutions",
                "the unique positive integer solution of 2x^3 - y^3 = 1 is "
                "(1,1); theta^0 = 1 gives (0,-1), rejected", os.str(), ok);
        }

        // --- the Diophantine applications ---
        {
            bool ok = true;
            for (long a = 2; a <= 1000 && ok; ++a)
                ok = validate_p31(family_claim1(a)).valid;
            row("claim-1-family", "{a-1, a+1, a^4+a^2+1} is a P31-set (a >= 2)",
                "validated for every a in [2, 1000]", ok);
        }
        {
            bool ok = true;
            for (long a = 1; a <= 59 && ok; ++a)
                for (long b = a + 1; b <= 60 && ok; ++b)
                    ok = validate_p31(family_claim2(a, b)).valid;
            row("claim-2-family", "{a, b, a^2 b^2 + 3ab + 3} is a P31-set (a < b)",
                "validated for every 1 <= a < b <= 60", ok);
        }
        {
            P31Set s = P31Set::from({1, 2, 13});
            bool ok = validate_p31(s).valid &&
                      family_claim2(1, 2).elements == s.elements;
            row("remark-1-2-13",
                "{1, 2, 13} is a P31-set, the a = 1, b = 2 member of the second "
                "family", "validated directly and as family_claim2(1, 2)", ok);
        }
        note_row("theorem-1-finiteness",
                 "every P31-set is finite (integral points on an elliptic curve)",
                 "not mechanized: outside the computational scope of this "
                 "pipeline", "the quantitative results do not depend on it");
        {
            ExtensionReport rep = search_extensions(P31Set::from({1, 2, 13}), 1000000);
            ordered_json proof = prove_nonextendible(plus);
            bool proof_ok = true;
            for (const auto& c : proof["checks"]) proof_ok = proof_ok && c["status"] == "pass";
            row("corollary-1", "{1, 2, 13} is nonextendible",
                "no candidate y <= 10^6 extends it, and the norm +1 certificate "
                "forces d = 0 for every candidate d", rep.survivors.empty() && proof_ok,
                "proved for every d >= 1, not only d > 13 as published");
        }
        {
            std::vector<BigInt> hits = search_cubic_triangular(1000000);
            ordered_json proof = reduce_cubic_triangular(plus, minus);
            bool proof_ok = true;
            for (const auto& c : proof["checks"]) proof_ok = proof_ok && c["status"] == "pass";
            row("corollary-2", "n = 1 is the unique cubic-triangular number",
                "scan to 10^6 finds only n = 1; odd case gives n = 1, even case "
                "gives none", hits == std::vector<BigInt>{1} && proof_ok,
                "the even factorization split needs the norm -1 equation, which "
                "the published proof does not treat");
        }
    } catch (const std::exception& e) {
        rows.push_back({"pipeline", "the full certificate pipeline completes",
                        std::string("exception: ") + e.what(), "fail", ""});
    }

    return rows;
}

nlohmann::ordered_json verify_paper_json() {
    std::vector<PaperRow> rows = verify_paper_rows();
    ordered_json doc = make_envelope("2x^3 - y^3 = +-1 and applications", 31, 6);
    for (const PaperRow& r : rows) {
        ordered_json inputs = ordered_json::object();
        if (!r.note.empty()) inputs["note"] = r.note;
        add_check(doc, r.name, std::move(inputs), r.computed, r.claim, r.status);
        if (r.status == "corrected" || r.status == "note")
            doc["divergences_from_paper"].push_back(
                ordered_json{{"name", r.name},
                             {"published", r.claim},
                             {"computed", r.computed},
                             {"note", r.note}});
    }
    return doc;
}

int verify_paper_exit(const std::vector<PaperRow>& rows) {
    for (const PaperRow& r : rows)
        if (r.status == "fail") return 1;
    return 0;
}

} // namespace pthue
