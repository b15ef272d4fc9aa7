#ifndef LEXDYN_LEXSTATS_HPP
#define LEXDYN_LEXSTATS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexdyn/errors.hpp"
#include "lexdyn/fitting.hpp"

namespace lexdyn {

/// Lexical summary of one text unit. Ratios are stored at full
/// precision; rounding happens only at display time.
struct LexSummary {
    std::size_t type_count = 0;  // distinct word types
    std::size_t token_count = 0; // running word tokens
    double ttr = 0.0;            // type_count / token_count
    std::size_t hapax_count = 0; // types occurring exactly once
    double hapax_share = 0.0;    // hapax_count / type_count
};

struct RankedEntry {
    std::size_t rank = 0; // 1-based, no ties
    std::string type;
    std::size_t frequency = 0;
};

/// Word type -> occurrence count, plus the rank ordering: frequency
/// descending, ties broken by lexicographic order of the type.
struct FreqTable {
    std::unordered_map<std::string, std::size_t> entries;
    std::vector<RankedEntry> ranked;
};

/// Exact occurrence counts of a non-empty token list.
/// Throws StatsError("empty unit") on an empty list.
FreqTable frequency_table(std::span<const std::string> tokens);

/// Types, tokens, TTR and hapax statistics of a non-empty token list.
/// Throws StatsError("empty unit") on an empty list.
LexSummary summary(std::span<const std::string> tokens);

/// Power fit of frequency against rank over the whole ranked table
/// (log-log OLS; the exponent comes back negative for natural text).
/// Tables whose frequencies are all equal carry no rank information
/// and are rejected with FitError rather than fitted as a zero slope.
PowerFit zipf_fit(const FreqTable& table);

} // namespace lexdyn

#endif
