#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "frab/frab.hpp"

namespace frab {

/// A finite sequence of symbols awaiting tabulation.
using TokenStream = std::vector<Symbol>;

/// Entries within this distance of an integer are rounded by reconstruct();
/// anything farther is rejected.
inline constexpr double reconstruct_integral_tolerance = 1e-9;

/// Counts occurrences: the coefficient of each symbol in the result is the
/// number of times it appears in the stream.
inline Frab tabulate(const TokenStream& tokens) {
    Frab::Entries counts;
    for (const auto& token : tokens) {
        counts[token] += 1.0;
    }
    return Frab(std::move(counts));
}

/// Merging two tables of counts is exactly group addition: it agrees with
/// tabulating the concatenation of the underlying streams. Named alias of
/// add(), no separate code path.
inline Frab merge_counts(const Frab& x, const Frab& y) { return add(x, y); }

/// Expands a table of counts back into a sorted stream, each symbol repeated
/// its count times. Counts must be nonnegative integers (to within
/// reconstruct_integral_tolerance); zero rounds are accommodated.
inline TokenStream reconstruct(const Frab& counts) {
    TokenStream out;
    for (const auto& [symbol, value] : counts.entries()) {
        const double nearest = std::rint(value);
        if (std::abs(value - nearest) > reconstruct_integral_tolerance) {
            throw NonIntegralCount("non-integral entry for symbol '" + symbol.str() + "'");
        }
        if (nearest < 0.0) {
            throw NegativeCount("negative entry for symbol '" + symbol.str() + "'");
        }
        out.insert(out.end(), static_cast<std::size_t>(nearest), symbol);
    }
    return out;  // map order, hence sorted ascending
}

}  // namespace frab
