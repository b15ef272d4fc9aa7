#include "lexdyn/growth.hpp"

#include <string_view>
#include <unordered_set>

namespace lexdyn {

namespace {

[[noreturn]] void throw_empty_fragment(std::size_t index) {
    throw StatsError("fragment " + std::to_string(index) + " is empty");
}

double ratio(std::size_t types, std::size_t tokens) {
    return static_cast<double>(types) / static_cast<double>(tokens);
}

} // namespace

std::vector<LexSummary> fragment_table(const std::vector<Fragment>& fragments) {
    if (fragments.empty())
        throw StatsError("no fragments");

    std::vector<LexSummary> summaries;
    summaries.reserve(fragments.size());
    for (const auto& frag : fragments) {
        if (frag.tokens.empty())
            throw_empty_fragment(frag.index);
        summaries.push_back(summary(frag.tokens));
    }
    return summaries;
}

GrowthCurve cumulative_curve(const std::vector<Fragment>& fragments) {
    if (fragments.empty())
        throw StatsError("no fragments");

    GrowthCurve curve;
    curve.granularity = Granularity::FragmentLevel;
    curve.points.reserve(fragments.size());

    // Views into the fragments' token storage, which outlives this call.
    std::unordered_set<std::string_view> seen;
    std::size_t cum_tokens = 0;
    for (const auto& frag : fragments) {
        if (frag.tokens.empty())
            throw_empty_fragment(frag.index);
        cum_tokens += frag.tokens.size();
        for (const auto& t : frag.tokens)
            seen.insert(t);
        curve.points.push_back({cum_tokens, seen.size(), ratio(seen.size(), cum_tokens)});
    }
    return curve;
}

GrowthCurve growth_curve(std::span<const std::string> tokens, std::size_t step) {
    if (tokens.empty())
        throw StatsError("empty unit");
    if (step == 0)
        throw StatsError("step must be >= 1");

    GrowthCurve curve;
    curve.granularity = Granularity::TokenStep;
    curve.points.reserve(tokens.size() / step + 1);

    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        seen.insert(tokens[i]);
        if ((i + 1) % step == 0)
            curve.points.push_back({i + 1, seen.size(), ratio(seen.size(), i + 1)});
    }
    if (curve.points.empty() || curve.points.back().cum_tokens != tokens.size())
        curve.points.push_back({tokens.size(), seen.size(), ratio(seen.size(), tokens.size())});
    return curve;
}

} // namespace lexdyn
