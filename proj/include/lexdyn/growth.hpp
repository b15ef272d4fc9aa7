#ifndef LEXDYN_GROWTH_HPP
#define LEXDYN_GROWTH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lexdyn/errors.hpp"
#include "lexdyn/ingest.hpp"
#include "lexdyn/lexstats.hpp"

namespace lexdyn {

/// One point of a vocabulary growth curve: counts over the text prefix
/// read so far.
struct CurvePoint {
    std::size_t cum_tokens = 0;
    std::size_t cum_types = 0;
    double ttr = 0.0; // cum_types / cum_tokens
};

enum class Granularity {
    FragmentLevel,
    TokenStep,
};

/// Ordered growth curve; cum_tokens strictly increases, cum_types is
/// non-decreasing, and the last point equals the whole-text summary.
struct GrowthCurve {
    std::vector<CurvePoint> points;
    Granularity granularity = Granularity::FragmentLevel;
};

/// Independent per-fragment summaries, in fragment order. Types are
/// counted within each fragment only. Throws StatsError naming the
/// first empty fragment.
std::vector<LexSummary> fragment_table(const std::vector<Fragment>& fragments);

/// Cumulative curve over fragment prefixes: point k counts the tokens
/// of fragments 1..k and the distinct types across them (set union,
/// not a sum of per-fragment type counts). Throws StatsError when the
/// list is empty or any fragment is empty.
GrowthCurve cumulative_curve(const std::vector<Fragment>& fragments);

/// Fine-grained curve: one point after every `step` tokens plus a
/// final point at the end of the text, so the curve always terminates
/// at the whole-text summary. Throws StatsError on empty input or
/// step == 0.
GrowthCurve growth_curve(std::span<const std::string> tokens, std::size_t step);

} // namespace lexdyn

#endif
