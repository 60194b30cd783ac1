#include "pthue/strassman.hpp"

#include "pthue/errors.hpp"

#include <stdexcept>
#include <string>

namespace pthue {

std::string to_string(RootVerdict v) {
    return v == RootVerdict::exact ? "exact" : "bounded-only";
}

long strassman_bound(const ValuationProfile& prof) {
    if (prof.entries.empty())
        throw std::invalid_argument("strassman_bound: empty profile");
    for (size_t i = 1; i < prof.entries.size(); ++i)
        if (prof.entries[i].index <= prof.entries[i - 1].index)
            throw std::invalid_argument("strassman_bound: indices not ascending");
    if (prof.tail) {
        if (prof.tail->slope <= 0)
            throw std::invalid_argument("strassman_bound: tail slope must be positive");
        if (prof.tail->start <= prof.entries.back().index)
            throw std::invalid_argument("strassman_bound: tail overlaps entries");
    }

    bool have_exact = false;
    long min_val = 0;
    for (const auto& e : prof.entries) {
        if (e.kind != ValuationEntry::Kind::exact) continue;
        if (!have_exact || e.valuation < min_val) min_val = e.valuation;
        have_exact = true;
    }
    if (!have_exact)
        throw std::invalid_argument(
            "strassman_bound: no coefficient certified nonzero, the theorem needs gamma_n != 0 for some n");

    // A lower-bound entry at or below the minimum could attain or undercut
    // it; the largest attaining index is then undetermined at this
    // precision.
    for (const auto& e : prof.entries) {
        if (e.kind == ValuationEntry::Kind::lower_bound && e.valuation <= min_val)
            throw inconclusive_error(
                "strassman_bound",
                "coefficient at index " + std::to_string(e.index) +
                    " is only bounded below by " + std::to_string(e.valuation) +
                    " <= minimal exact valuation " + std::to_string(min_val) +
                    "; raise the working precision");
    }
    if (prof.tail && prof.tail->value(prof.tail->start) <= Rational(min_val))
        throw inconclusive_error(
            "strassman_bound",
            "tail floor at its start does not exceed minimal exact valuation " +
                std::to_string(min_val) + "; raise the working precision");

    long best = -1;
    for (const auto& e : prof.entries)
        if (e.kind == ValuationEntry::Kind::exact && e.valuation == min_val)
            best = e.index;
    return best;
}

RootVerdict count_exact_roots(const ValuationProfile& prof, long known_roots) {
    if (known_roots < 0)
        throw std::invalid_argument("count_exact_roots: negative root count");
    long bound = strassman_bound(prof);
    if (known_roots > bound)
        throw std::invalid_argument(
            "count_exact_roots: " + std::to_string(known_roots) +
            " known roots exceed the Strassman bound " + std::to_string(bound) +
            "; the upstream computation is inconsistent");
    return known_roots == bound ? RootVerdict::exact : RootVerdict::bounded_only;
}

} // namespace pthue
