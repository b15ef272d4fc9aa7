#ifndef LEXDYN_COMPARE_HPP
#define LEXDYN_COMPARE_HPP

#include <optional>
#include <span>

#include "lexdyn/errors.hpp"
#include "lexdyn/fitting.hpp"
#include "lexdyn/growth.hpp"
#include "lexdyn/lexstats.hpp"

namespace lexdyn {

/// Pairwise comparison of a source curve and its translation curve.
/// Deltas are target minus source; token_ratio is target tokens over
/// source tokens at the final points.
struct PairReport {
    double ttr_correlation = 0.0;
    PowerFit source_fit;
    PowerFit target_fit;
    double delta_a = 0.0;
    double delta_b = 0.0;
    double token_ratio = 0.0;
};

/// Caveat attached to every serialized PairReport: a high TTR
/// correlation also shows up between mismatched source/translation
/// pairs, so it indicates a language-pair regularity rather than a
/// property of this particular pair.
extern const char* const kPairCorrelationCaveat;

/// Reading aid attached to every serialized LevellingReport: spread
/// ratios below 1 on both coefficients are consistent with levelling
/// out. The report states numbers only and renders no verdict.
extern const char* const kLevellingNote;

/// Coefficient dispersion of two fit cohorts. Spreads are ranges
/// (max - min); ratios are target over source and defined only when
/// the source spread is positive. Sample standard deviations are
/// emitted as a secondary measure for cohorts of three or more.
struct LevellingReport {
    std::size_t source_count = 0;
    std::size_t target_count = 0;
    double spread_source_a = 0.0;
    double spread_target_a = 0.0;
    double spread_source_b = 0.0;
    double spread_target_b = 0.0;
    std::optional<double> spread_ratio_a;
    std::optional<double> spread_ratio_b;
    std::optional<double> stddev_source_a;
    std::optional<double> stddev_target_a;
    std::optional<double> stddev_source_b;
    std::optional<double> stddev_target_b;
};

/// Compare two index-aligned curves with the same number of points
/// (>= 3): Pearson correlation of the TTR sequences, a power fit of
/// each curve's (cum_tokens, cum_types) points, coefficient deltas and
/// the final token ratio. Throws CompareError on a point-count
/// mismatch or too few points.
PairReport compare_pair(const GrowthCurve& source_curve, const GrowthCurve& target_curve);

/// Coefficient spreads of two equally sized fit cohorts (>= 2 each).
/// Throws CompareError otherwise.
LevellingReport levelling_out(std::span<const PowerFit> source_fits,
                              std::span<const PowerFit> target_fits);

/// target token count / source token count.
double length_ratio(const LexSummary& source, const LexSummary& target);

} // namespace lexdyn

#endif
