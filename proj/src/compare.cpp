#include "lexdyn/compare.hpp"

#include <algorithm>
#include <cmath>

namespace lexdyn {

const char* const kPairCorrelationCaveat =
    "high ttr correlation also occurs between mismatched source/translation pairs; "
    "it reflects the language pair rather than this specific pairing";

const char* const kLevellingNote =
    "spread ratios below 1 on both coefficients are consistent with levelling out; "
    "this report states the numbers only";

namespace {

std::vector<std::pair<double, double>> fit_points(const GrowthCurve& curve) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(curve.points.size());
    for (const auto& p : curve.points)
        pts.emplace_back(static_cast<double>(p.cum_tokens), static_cast<double>(p.cum_types));
    return pts;
}

struct Spread {
    double range = 0.0;
    std::optional<double> stddev;
};

Spread spread_of(std::span<const PowerFit> fits, double PowerFit::*coeff) {
    double lo = fits.front().*coeff;
    double hi = lo;
    double sum = 0.0;
    for (const auto& f : fits) {
        lo = std::min(lo, f.*coeff);
        hi = std::max(hi, f.*coeff);
        sum += f.*coeff;
    }
    Spread s;
    s.range = hi - lo;
    if (fits.size() >= 3) {
        const double mean = sum / static_cast<double>(fits.size());
        double ss = 0.0;
        for (const auto& f : fits)
            ss += (f.*coeff - mean) * (f.*coeff - mean);
        s.stddev = std::sqrt(ss / static_cast<double>(fits.size() - 1));
    }
    return s;
}

std::optional<double> spread_ratio(double source, double target) {
    if (source > 0.0)
        return target / source;
    return std::nullopt;
}

} // namespace

PairReport compare_pair(const GrowthCurve& source_curve, const GrowthCurve& target_curve) {
    if (source_curve.points.size() != target_curve.points.size())
        throw CompareError("point-count mismatch: " +
                           std::to_string(source_curve.points.size()) + " vs " +
                           std::to_string(target_curve.points.size()));
    if (source_curve.points.size() < 3)
        throw CompareError("need at least 3 index-aligned points");

    std::vector<double> source_ttr, target_ttr;
    source_ttr.reserve(source_curve.points.size());
    target_ttr.reserve(target_curve.points.size());
    for (const auto& p : source_curve.points)
        source_ttr.push_back(p.ttr);
    for (const auto& p : target_curve.points)
        target_ttr.push_back(p.ttr);

    PairReport report;
    report.ttr_correlation = pearson(source_ttr, target_ttr);
    report.source_fit = power_fit(fit_points(source_curve));
    report.target_fit = power_fit(fit_points(target_curve));
    report.delta_a = report.target_fit.a - report.source_fit.a;
    report.delta_b = report.target_fit.b - report.source_fit.b;
    report.token_ratio = static_cast<double>(target_curve.points.back().cum_tokens) /
                         static_cast<double>(source_curve.points.back().cum_tokens);
    return report;
}

LevellingReport levelling_out(std::span<const PowerFit> source_fits,
                              std::span<const PowerFit> target_fits) {
    if (source_fits.size() < 2 || target_fits.size() < 2)
        throw CompareError("each cohort needs at least 2 fits");
    if (source_fits.size() != target_fits.size())
        throw CompareError("cohort size mismatch: " +
                           std::to_string(source_fits.size()) + " vs " +
                           std::to_string(target_fits.size()));

    LevellingReport report;
    report.source_count = source_fits.size();
    report.target_count = target_fits.size();

    const Spread sa = spread_of(source_fits, &PowerFit::a);
    const Spread ta = spread_of(target_fits, &PowerFit::a);
    const Spread sb = spread_of(source_fits, &PowerFit::b);
    const Spread tb = spread_of(target_fits, &PowerFit::b);

    report.spread_source_a = sa.range;
    report.spread_target_a = ta.range;
    report.spread_source_b = sb.range;
    report.spread_target_b = tb.range;
    report.spread_ratio_a = spread_ratio(sa.range, ta.range);
    report.spread_ratio_b = spread_ratio(sb.range, tb.range);
    report.stddev_source_a = sa.stddev;
    report.stddev_target_a = ta.stddev;
    report.stddev_source_b = sb.stddev;
    report.stddev_target_b = tb.stddev;
    return report;
}

double length_ratio(const LexSummary& source, const LexSummary& target) {
    return static_cast<double>(target.token_count) / static_cast<double>(source.token_count);
}

} // namespace lexdyn
