#include "pthue/cli.hpp"

#include "pthue/certificate.hpp"
#include "pthue/errors.hpp"
#include "pthue/p31.hpp"
#include "pthue/paper_report.hpp"
#include "pthue/skolem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pthue {

namespace {

using nlohmann::ordered_json;

BigInt parse_big(const std::string& s) {
    try {
        return BigInt(s, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(item);
    if (out.empty()) throw std::invalid_argument("empty list: '" + s + "'");
    return out;
}

// Writes to --out when set, the stream otherwise.  The trailing newline is
// part of the payload so file and stream output are byte-identical.
void deliver(const std::string& payload, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    f << payload;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_paper_table(const std::vector<PaperRow>& rows) {
    std::ostringstream os;
    int consistent = 0, corrected = 0, notes = 0, fails = 0;
    for (const PaperRow& r : rows) {
        os << r.name;
        for (size_t i = r.name.size(); i < 34; ++i) os << ' ';
        os << r.status << "\n";
        os << "  claim:    " << r.claim << "\n";
        os << "  computed: " << r.computed << "\n";
        if (!r.note.empty()) os << "  note:     " << r.note << "\n";
        if (r.status == "paper-consistent") ++consistent;
        else if (r.status == "corrected") ++corrected;
        else if (r.status == "note") ++notes;
        else ++fails;
    }
    os << "\n" << rows.size() << " rows: " << consistent << " paper-consistent, "
       << corrected << " corrected, " << notes << " notes, " << fails
       << " failures\n";
    os << (fails == 0 ? "structural checks: all pass\n"
                      : "structural checks: FAILED\n");
    return os.str();
}

std::string pair_text(const std::pair<BigInt, BigInt>& s) {
    return "(" + big_to_string(s.first) + ", " + big_to_string(s.second) + ")";
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
    std::vector<PaperRow> rows = verify_paper_rows();
    if (cfg.format == OutputFormat::json) {
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
        deliver(dump(doc), cfg, out);
    } else {
        deliver(render_paper_table(rows), cfg, out);
    }
    return verify_paper_exit(rows);
}

int cmd_solve_thue(const RunConfig& cfg, int norm, std::ostream& out) {
    ThueCertificate cert = solve_thue(norm, cfg.prime, cfg.precision);
    if (cfg.format == OutputFormat::json) {
        deliver(dump(cert.doc), cfg, out);
        return 0;
    }
    std::ostringstream os;
    os << "equation: 2x^3 - y^3 = " << (norm == 1 ? "1" : "-1") << "\n";
    os << "zero set of c_n: ";
    for (size_t i = 0; i < cert.zero_set.size(); ++i)
        os << (i ? ", " : "") << cert.zero_set[i];
    os << "\ninteger solutions:";
    for (const auto& s : cert.solutions) os << " " << pair_text(s);
    os << "\npositive solutions:";
    if (cert.positive_solutions.empty()) os << " none";
    for (const auto& s : cert.positive_solutions) os << " " << pair_text(s);
    os << "\n";
    deliver(os.str(), cfg, out);
    return 0;
}

int cmd_p31_validate(const RunConfig& cfg, const std::vector<std::string>& elems,
                     std::ostream& out) {
    std::vector<BigInt> xs;
    for (const std::string& e : elems) xs.push_back(parse_big(e));
    P31Set s = P31Set::from(std::move(xs));
    ValidationResult res = validate_p31(s);
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("P31-set validation", cfg.prime, cfg.precision);
        ordered_json els = ordered_json::array();
        for (const BigInt& x : s.elements) els.push_back(big_to_string(x));
        ordered_json value;
        if (res.valid) {
            value = "all triple products + 1 are cubes";
        } else {
            value = ordered_json{{"failing_triple",
                                  {big_to_string(res.first_failure->xi),
                                   big_to_string(res.first_failure->xj),
                                   big_to_string(res.first_failure->xk)}},
                                 {"product_plus_one",
                                  big_to_string(res.first_failure->product_plus_one)}};
        }
        add_check(doc, "p31-validate", {{"elements", els}}, value,
                  "every 3-subset product + 1 is a perfect cube",
                  res.valid ? "pass" : "fail");
        deliver(dump(doc), cfg, out);
    } else if (res.valid) {
        deliver("valid P31-set\n", cfg, out);
    } else {
        deliver("not a P31-set: " + big_to_string(res.first_failure->xi) + "*" +
                    big_to_string(res.first_failure->xj) + "*" +
                    big_to_string(res.first_failure->xk) + " + 1 = " +
                    big_to_string(res.first_failure->product_plus_one) +
                    " is not a cube\n",
                cfg, out);
    }
    return res.valid ? 0 : 1;
}

int cmd_p31_family(const RunConfig& cfg, const P31Set& s, std::ostream& out) {
    ValidationResult res = validate_p31(s);
    std::string els;
    for (size_t i = 0; i < s.elements.size(); ++i)
        els += (i ? ", " : "") + big_to_string(s.elements[i]);
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("P31-set family", cfg.prime, cfg.precision);
        ordered_json arr = ordered_json::array();
        for (const BigInt& x : s.elements) arr.push_back(big_to_string(x));
        add_check(doc, "family-member", ordered_json::object(), arr,
                  "a valid P31-set", res.valid ? "pass" : "fail");
        deliver(dump(doc), cfg, out);
    } else {
        deliver("{" + els + "}\n" +
                    (res.valid ? "valid P31-set\n" : "NOT a P31-set\n"),
                cfg, out);
    }
    return res.valid ? 0 : 1;
}

int cmd_p31_extend(const RunConfig& cfg, const std::vector<std::string>& elems,
                   std::ostream& out) {
    std::vector<BigInt> xs;
    for (const std::string& e : elems) xs.push_back(parse_big(e));
    P31Set s = P31Set::from(std::move(xs));
    ExtensionReport rep = search_extensions(s, BigInt(static_cast<long>(cfg.bound)));
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("P31-set extension search", cfg.prime,
                                         cfg.precision);
        ordered_json base = ordered_json::array();
        for (const BigInt& x : rep.base.elements) base.push_back(big_to_string(x));
        ordered_json survivors = ordered_json::array();
        for (const BigInt& y : rep.survivors) survivors.push_back(big_to_string(y));
        ordered_json sample = ordered_json::array();
        for (size_t i = 0; i < rep.failures.size() && i < 100; ++i) {
            const auto& [y, fail] = rep.failures[i];
            sample.push_back(ordered_json{
                {"candidate", big_to_string(y)},
                {"pair", {big_to_string(fail.xi), big_to_string(fail.xj)}},
                {"product_plus_one", big_to_string(fail.product_plus_one)}});
        }
        add_check(doc, "search-extensions",
                  {{"base", base}, {"bound", big_to_string(rep.bound)}},
                  ordered_json{{"survivors", survivors},
                               {"candidates_checked", rep.candidates_checked},
                               {"failures_sample", sample},
                               {"failures_truncated", rep.failures_truncated}},
                  "survivors extend the set", "pass");
        deliver(dump(doc), cfg, out);
    } else {
        std::ostringstream os;
        os << "candidates checked: " << rep.candidates_checked << "\n";
        if (rep.survivors.empty()) {
            os << "survivors: none\n";
        } else {
            os << "survivors:";
            for (const BigInt& y : rep.survivors) os << " " << y;
            os << "\n";
        }
        deliver(os.str(), cfg, out);
    }
    return 0;
}

int cmd_tricube(const RunConfig& cfg, std::ostream& out) {
    std::vector<BigInt> hits =
        search_cubic_triangular(BigInt(static_cast<long>(cfg.bound)));
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("n(n+1)/2 = m^3", cfg.prime, cfg.precision);
        ordered_json arr = ordered_json::array();
        for (const BigInt& n : hits) arr.push_back(big_to_string(n));
        add_check(doc, "search-cubic-triangular",
                  {{"bound", std::to_string(cfg.bound)}}, arr,
                  "n in [1, bound] with T_n a perfect cube", "pass");
        deliver(dump(doc), cfg, out);
    } else {
        std::ostringstream os;
        for (const BigInt& n : hits) os << n << "\n";
        deliver(os.str(), cfg, out);
    }
    return 0;
}

int cmd_padic_hensel(const RunConfig& cfg, const std::string& poly_arg,
                     std::ostream& out) {
    std::vector<BigInt> coeffs;
    for (const std::string& c : split_commas(poly_arg)) coeffs.push_back(parse_big(c));
    IntPoly f = IntPoly::from_coeffs(std::move(coeffs));
    std::vector<long> roots = roots_mod_p(f, cfg.prime);
    std::vector<PadicInt> lifts;
    for (long r : roots) lifts.push_back(hensel_lift(f, cfg.prime, r, cfg.precision));
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("hensel lift", cfg.prime, cfg.precision);
        for (size_t i = 0; i < roots.size(); ++i)
            add_check(doc, "hensel-root-" + std::to_string(roots[i]),
                      {{"p", cfg.prime}, {"k", cfg.precision}},
                      big_to_string(lifts[i].residue), "f(lift) == 0 mod p^k",
                      "pass");
        deliver(dump(doc), cfg, out);
    } else {
        std::ostringstream os;
        if (roots.empty()) {
            os << "no roots mod " << cfg.prime << "\n";
        } else {
            for (size_t i = 0; i < roots.size(); ++i)
                os << roots[i] << " -> " << lifts[i].residue << " (mod "
                   << cfg.prime << "^" << cfg.precision << ")\n";
        }
        deliver(os.str(), cfg, out);
    }
    return 0;
}

int cmd_padic_strassman(const RunConfig& cfg, const std::string& vals_arg,
                        const std::string& tail_arg, std::ostream& out) {
    ValuationProfile prof;
    std::vector<std::string> tokens = split_commas(vals_arg);
    for (size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "inf") {
            prof.entries.push_back({static_cast<long>(i), 0,
                                    ValuationEntry::Kind::zero});
        } else if (t.rfind("ge", 0) == 0) {
            prof.entries.push_back({static_cast<long>(i),
                                    static_cast<long>(parse_big(t.substr(2)).get_si()),
                                    ValuationEntry::Kind::lower_bound});
        } else {
            prof.entries.push_back({static_cast<long>(i),
                                    static_cast<long>(parse_big(t).get_si()),
                                    ValuationEntry::Kind::exact});
        }
    }
    if (!tail_arg.empty()) {
        if (tail_arg != "linear")
            throw std::invalid_argument("unknown tail model: " + tail_arg);
        long start = static_cast<long>(tokens.size());
        prof.tail = AffineTail{start, Rational(start), Rational(1)};
    }
    long bound = strassman_bound(prof);
    if (cfg.format == OutputFormat::json) {
        ordered_json doc = make_envelope("strassman bound", cfg.prime, cfg.precision);
        add_check(doc, "strassman-bound",
                  {{"valuations", tokens},
                   {"tail", tail_arg.empty() ? "none" : tail_arg}},
                  bound, "largest index attaining the minimal valuation", "pass");
        deliver(dump(doc), cfg, out);
    } else {
        deliver("bound: " + std::to_string(bound) + "\n", cfg, out);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified 31-adic solution of the Thue equation 2x^3 - y^3 = +-1,\n"
                 "with P31-set and cubic-triangular applications"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out_path, "write output to this file");

    CLI::App* vp = app.add_subcommand("verify-paper",
                                      "recompute every published claim");

    CLI::App* st = app.add_subcommand("solve-thue", "solve 2x^3 - y^3 = norm");
    std::string norm_str;
    st->add_option("--norm", norm_str, "+1 or -1")->required();
    st->add_option("--prime", cfg.prime, "split prime (default 31)");
    st->add_option("--prec", cfg.precision, "precision exponent")
        ->check(CLI::Range(2, 12));

    CLI::App* p31 = app.add_subcommand("p31", "P31-set operations");
    p31->require_subcommand(1);
    CLI::App* val = p31->add_subcommand("validate", "check a set");
    std::vector<std::string> val_elems;
    val->add_option("elements", val_elems, "set elements")->required();
    CLI::App* fam = p31->add_subcommand("family", "generate a family member");
    fam->require_subcommand(1);
    CLI::App* c1 = fam->add_subcommand("claim1", "{a-1, a+1, a^4+a^2+1}");
    std::string a_str;
    c1->add_option("--a", a_str, "a >= 2")->required();
    CLI::App* c2 = fam->add_subcommand("claim2", "{a, b, a^2 b^2 + 3ab + 3}");
    std::string a2_str, b2_str;
    c2->add_option("--a", a2_str, "a >= 1")->required();
    c2->add_option("--b", b2_str, "b > a")->required();
    CLI::App* ext = p31->add_subcommand("extend", "search for extensions");
    std::vector<std::string> ext_elems;
    ext->add_option("elements", ext_elems, "base set")->required();
    ext->add_option("--bound", cfg.bound, "candidate bound");

    CLI::App* tri = app.add_subcommand("tricube", "search cubic-triangular n");
    tri->add_option("--bound", cfg.bound, "search bound");

    CLI::App* pad = app.add_subcommand("padic", "p-adic primitives");
    pad->require_subcommand(1);
    CLI::App* hen = pad->add_subcommand("hensel", "lift all roots of a polynomial");
    std::string poly_arg;
    hen->add_option("--poly", poly_arg, "coefficients c0,c1,... low to high")
        ->required();
    hen->add_option("--prime", cfg.prime, "prime p")->required();
    hen->add_option("--prec", cfg.precision, "precision exponent k")
        ->check(CLI::Range(2, 12));
    CLI::App* sm = pad->add_subcommand("strassman", "bound the zeros of a series");
    std::string vals_arg, tail_arg;
    sm->add_option("--valuations", vals_arg,
                   "coefficient valuations v0,v1,... (integer, geK, or inf)")
        ->required();
    sm->add_option("--tail", tail_arg, "tail model: linear (v >= n beyond the list)");

    for (CLI::App* sub : {vp, st, p31, val, fam, c1, c2, ext, tri, pad, hen, sm})
        sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;

    try {
        if (vp->parsed()) {
            cfg.command = "verify-paper";
            return cmd_verify_paper(cfg, out);
        }
        if (st->parsed()) {
            cfg.command = "solve-thue";
            if (norm_str != "+1" && norm_str != "1" && norm_str != "-1")
                throw std::invalid_argument("--norm must be +1 or -1");
            return cmd_solve_thue(cfg, norm_str == "-1" ? -1 : 1, out);
        }
        if (val->parsed()) {
            cfg.command = "p31-validate";
            return cmd_p31_validate(cfg, val_elems, out);
        }
        if (c1->parsed()) {
            cfg.command = "p31-family-claim1";
            return cmd_p31_family(cfg, family_claim1(parse_big(a_str)), out);
        }
        if (c2->parsed()) {
            cfg.command = "p31-family-claim2";
            return cmd_p31_family(
                cfg, family_claim2(parse_big(a2_str), parse_big(b2_str)), out);
        }
        if (ext->parsed()) {
            cfg.command = "p31-extend";
            return cmd_p31_extend(cfg, ext_elems, out);
        }
        if (tri->parsed()) {
            cfg.command = "tricube";
            return cmd_tricube(cfg, out);
        }
        if (hen->parsed()) {
            cfg.command = "padic-hensel";
            return cmd_padic_hensel(cfg, poly_arg, out);
        }
        if (sm->parsed()) {
            cfg.command = "padic-strassman";
            return cmd_padic_strassman(cfg, vals_arg, tail_arg, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const inconclusive_error& e) {
        err << "inconclusive: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pthue
