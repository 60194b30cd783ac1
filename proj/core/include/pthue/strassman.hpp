#pragma once

#include "pthue/integer_kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pthue {

// One coefficient's valuation knowledge.
//   exact:        v(gamma) == valuation
//   lower_bound:  v(gamma) >= valuation (residue vanished at working precision)
//   zero:         gamma == 0 exactly (never attains the maximal norm)
struct ValuationEntry {
    enum class Kind { exact, lower_bound, zero };

    long index = 0;
    long valuation = 0;  // ignored for kind == zero
    Kind kind = Kind::exact;
};

// Strictly increasing rational floor for the tail: for n > start - 1,
// v(gamma_n) >= value_at_start + (n - start) * slope.  Stored exactly.
struct AffineTail {
    long start = 0;
    Rational value_at_start;
    Rational slope;  // > 0

    Rational value(long n) const {
        return value_at_start + Rational(n - start) * slope;
    }
};

// Valuation profile of a convergent p-adic power series: entries for the
// stored coefficient indices (ascending), plus an optional tail bound for
// all later indices.  Absent tail means all later coefficients are exactly
// zero (finite series).
struct ValuationProfile {
    std::vector<ValuationEntry> entries;
    std::optional<AffineTail> tail;
};

// The largest index attaining the minimal valuation (maximal p-adic norm);
// the series has at most that many zeros in Z_p.  Rejects profiles with no
// coefficient certified nonzero (the theorem needs some gamma_n != 0).
// Raises inconclusive_error when a lower-bound entry or the tail could tie
// or undercut the minimum, so the attaining index is not strictly
// determined at this precision.
long strassman_bound(const ValuationProfile& prof);

enum class RootVerdict { exact, bounded_only };

std::string to_string(RootVerdict v);

// "exact" when the number of exhibited roots meets the Strassman bound,
// "bounded_only" when roots may be missing.  More known roots than the bound
// is an upstream inconsistency and is rejected.
RootVerdict count_exact_roots(const ValuationProfile& prof, long known_roots);

} // namespace pthue
