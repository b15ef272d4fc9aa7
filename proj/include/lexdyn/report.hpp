#ifndef LEXDYN_REPORT_HPP
#define LEXDYN_REPORT_HPP

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lexdyn/compare.hpp"
#include "lexdyn/fitting.hpp"
#include "lexdyn/growth.hpp"
#include "lexdyn/lexstats.hpp"

namespace lexdyn {

using json = nlohmann::ordered_json;

// JSON emission. Keys are in fixed (insertion) order and doubles use
// the shortest round-trip representation, so parsing an emitted report
// and re-rendering it is byte-identical.
json to_json(const LexSummary& s);
json to_json(const PowerFit& fit);
json to_json(const GrowthCurve& curve);
json to_json(const FreqTable& table);
json to_json(const PairReport& report);
json to_json(const LevellingReport& report);

/// Canonical rendering used for every emitted JSON report.
std::string render_json(const json& j);

// CSV emission. Locale-independent: '.' decimal point, ',' separator,
// '\n' newlines, header row always present, full float precision.
std::string summary_csv_header();
std::string summary_csv_row(std::string_view unit, const LexSummary& s);
std::string curve_csv(const GrowthCurve& curve);
std::string freq_csv(const FreqTable& table);
std::string fit_csv(const PowerFit& fit);
std::string pair_csv(const PairReport& report);
std::string levelling_csv(const LevellingReport& report);

/// True when the line is a header of a points CSV this library reads:
/// first two columns "x,y" or "cum_tokens,cum_types".
bool looks_like_points_csv(std::string_view first_line);

/// Parse a points CSV ("x,y" or "cum_tokens,cum_types[,...]" header;
/// extra columns ignored). Throws IngestError on malformed input.
std::vector<std::pair<double, double>> load_points_csv(std::istream& in);

/// Build a validated growth curve from (cum_tokens, cum_types) points;
/// ttr is recomputed at full precision. Throws IngestError when the
/// points do not form a curve (non-increasing tokens, types > tokens).
GrowthCurve curve_from_points(const std::vector<std::pair<double, double>>& points);

/// Read a PowerFit from JSON ({"a":..,"b":..}, optional "r2" and
/// "n_points", null allowed). Throws IngestError on malformed input.
PowerFit load_fit_json(std::istream& in);

/// Whole file as a string. Throws IngestError when unreadable.
std::string read_file(const std::filesystem::path& path);

/// Write content to path (or stdout when path is "-").
void write_output(const std::string& path_or_dash, const std::string& content);

} // namespace lexdyn

#endif
