#include "lexdyn/lexstats.hpp"

#include <algorithm>

namespace lexdyn {

namespace {

std::unordered_map<std::string, std::size_t> count_tokens(std::span<const std::string> tokens) {
    if (tokens.empty())
        throw StatsError("empty unit");
    std::unordered_map<std::string, std::size_t> counts;
    counts.reserve(tokens.size() / 2 + 1);
    for (const auto& t : tokens)
        ++counts[t];
    return counts;
}

} // namespace

FreqTable frequency_table(std::span<const std::string> tokens) {
    FreqTable table;
    table.entries = count_tokens(tokens);

    table.ranked.reserve(table.entries.size());
    for (const auto& [type, freq] : table.entries)
        table.ranked.push_back({0, type, freq});
    std::sort(table.ranked.begin(), table.ranked.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.frequency != b.frequency)
                      return a.frequency > b.frequency;
                  return a.type < b.type;
              });
    for (std::size_t i = 0; i < table.ranked.size(); ++i)
        table.ranked[i].rank = i + 1;
    return table;
}

LexSummary summary(std::span<const std::string> tokens) {
    const auto counts = count_tokens(tokens);

    LexSummary s;
    s.token_count = tokens.size();
    s.type_count = counts.size();
    for (const auto& [type, freq] : counts) {
        if (freq == 1)
            ++s.hapax_count;
    }
    s.ttr = static_cast<double>(s.type_count) / static_cast<double>(s.token_count);
    s.hapax_share = static_cast<double>(s.hapax_count) / static_cast<double>(s.type_count);
    return s;
}

PowerFit zipf_fit(const FreqTable& table) {
    if (table.ranked.size() < 2)
        throw FitError("need at least 2 ranked types");
    // ranked is sorted by frequency, so first/last give the extremes
    if (table.ranked.front().frequency == table.ranked.back().frequency)
        throw FitError("all frequencies equal: rank carries no information");

    std::vector<std::pair<double, double>> points;
    points.reserve(table.ranked.size());
    for (const auto& e : table.ranked)
        points.emplace_back(static_cast<double>(e.rank), static_cast<double>(e.frequency));
    return power_fit(points);
}

} // namespace lexdyn
