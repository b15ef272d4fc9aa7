#include "lexdyn/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "lexdyn/format.hpp"

namespace lexdyn {

namespace {

json number_or_null(double v) {
    if (std::isfinite(v))
        return v;
    return nullptr;
}

json optional_number(const std::optional<double>& v) {
    if (v)
        return *v;
    return nullptr;
}

std::string optional_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            cells.emplace_back(line.substr(pos));
            break;
        }
        cells.emplace_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return cells;
}

double parse_double(std::string_view cell, std::size_t line_no) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw IngestError("malformed number '" + std::string(cell) + "' on CSV line " +
                          std::to_string(line_no));
    return v;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

json to_json(const LexSummary& s) {
    json j;
    j["word_types"] = s.type_count;
    j["word_tokens"] = s.token_count;
    j["ttr"] = s.ttr;
    j["hapax_count"] = s.hapax_count;
    j["hapax_share"] = s.hapax_share;
    return j;
}

json to_json(const PowerFit& fit) {
    json j;
    j["a"] = number_or_null(fit.a);
    j["b"] = number_or_null(fit.b);
    j["r2"] = number_or_null(fit.r2);
    if (fit.n_points == 0)
        j["n_points"] = nullptr;
    else
        j["n_points"] = fit.n_points;
    return j;
}

json to_json(const GrowthCurve& curve) {
    json j;
    j["granularity"] =
        curve.granularity == Granularity::FragmentLevel ? "fragments" : "token_step";
    json points = json::array();
    for (const auto& p : curve.points) {
        json q;
        q["cum_tokens"] = p.cum_tokens;
        q["cum_types"] = p.cum_types;
        q["ttr"] = p.ttr;
        points.push_back(std::move(q));
    }
    j["points"] = std::move(points);
    return j;
}

json to_json(const FreqTable& table) {
    json entries = json::array();
    for (const auto& e : table.ranked) {
        json q;
        q["rank"] = e.rank;
        q["type"] = e.type;
        q["frequency"] = e.frequency;
        entries.push_back(std::move(q));
    }
    json j;
    j["entries"] = std::move(entries);
    return j;
}

json to_json(const PairReport& report) {
    json j;
    j["ttr_correlation"] = report.ttr_correlation;
    j["source_fit"] = to_json(report.source_fit);
    j["target_fit"] = to_json(report.target_fit);
    j["delta_a"] = report.delta_a;
    j["delta_b"] = report.delta_b;
    j["token_ratio"] = report.token_ratio;
    j["note"] = kPairCorrelationCaveat;
    return j;
}

json to_json(const LevellingReport& report) {
    json j;
    j["source_count"] = report.source_count;
    j["target_count"] = report.target_count;
    j["spread_source_a"] = report.spread_source_a;
    j["spread_target_a"] = report.spread_target_a;
    j["spread_ratio_a"] = optional_number(report.spread_ratio_a);
    j["spread_source_b"] = report.spread_source_b;
    j["spread_target_b"] = report.spread_target_b;
    j["spread_ratio_b"] = optional_number(report.spread_ratio_b);
    j["stddev_source_a"] = optional_number(report.stddev_source_a);
    j["stddev_target_a"] = optional_number(report.stddev_target_a);
    j["stddev_source_b"] = optional_number(report.stddev_source_b);
    j["stddev_target_b"] = optional_number(report.stddev_target_b);
    j["note"] = kLevellingNote;
    return j;
}

std::string render_json(const json& j) {
    return j.dump(2) + "\n";
}

std::string summary_csv_header() {
    return "unit,word_types,word_tokens,ttr,hapax_count,hapax_share\n";
}

std::string summary_csv_row(std::string_view unit, const LexSummary& s) {
    std::string row(unit);
    row += ',';
    row += std::to_string(s.type_count);
    row += ',';
    row += std::to_string(s.token_count);
    row += ',';
    row += format_double(s.ttr);
    row += ',';
    row += std::to_string(s.hapax_count);
    row += ',';
    row += format_double(s.hapax_share);
    row += '\n';
    return row;
}

std::string curve_csv(const GrowthCurve& curve) {
    std::string out = "cum_tokens,cum_types,ttr\n";
    for (const auto& p : curve.points) {
        out += std::to_string(p.cum_tokens);
        out += ',';
        out += std::to_string(p.cum_types);
        out += ',';
        out += format_double(p.ttr);
        out += '\n';
    }
    return out;
}

std::string freq_csv(const FreqTable& table) {
    std::string out = "rank,type,frequency\n";
    for (const auto& e : table.ranked) {
        out += std::to_string(e.rank);
        out += ',';
        out += e.type; // tokens never contain commas or quotes
        out += ',';
        out += std::to_string(e.frequency);
        out += '\n';
    }
    return out;
}

std::string fit_csv(const PowerFit& fit) {
    std::string out = "a,b,r2,n_points\n";
    out += format_double(fit.a);
    out += ',';
    out += format_double(fit.b);
    out += ',';
    out += format_double(fit.r2);
    out += ',';
    out += std::to_string(fit.n_points);
    out += '\n';
    return out;
}

std::string pair_csv(const PairReport& report) {
    std::string out =
        "ttr_correlation,source_a,source_b,source_r2,target_a,target_b,target_r2,"
        "delta_a,delta_b,token_ratio,note\n";
    out += format_double(report.ttr_correlation);
    out += ',';
    out += format_double(report.source_fit.a);
    out += ',';
    out += format_double(report.source_fit.b);
    out += ',';
    out += format_double(report.source_fit.r2);
    out += ',';
    out += format_double(report.target_fit.a);
    out += ',';
    out += format_double(report.target_fit.b);
    out += ',';
    out += format_double(report.target_fit.r2);
    out += ',';
    out += format_double(report.delta_a);
    out += ',';
    out += format_double(report.delta_b);
    out += ',';
    out += format_double(report.token_ratio);
    out += ',';
    out += kPairCorrelationCaveat; // comma-free by construction
    out += '\n';
    return out;
}

std::string levelling_csv(const LevellingReport& report) {
    std::string out =
        "source_count,target_count,spread_source_a,spread_target_a,spread_ratio_a,"
        "spread_source_b,spread_target_b,spread_ratio_b,"
        "stddev_source_a,stddev_target_a,stddev_source_b,stddev_target_b\n";
    out += std::to_string(report.source_count);
    out += ',';
    out += std::to_string(report.target_count);
    out += ',';
    out += format_double(report.spread_source_a);
    out += ',';
    out += format_double(report.spread_target_a);
    out += ',';
    out += optional_cell(report.spread_ratio_a);
    out += ',';
    out += format_double(report.spread_source_b);
    out += ',';
    out += format_double(report.spread_target_b);
    out += ',';
    out += optional_cell(report.spread_ratio_b);
    out += ',';
    out += optional_cell(report.stddev_source_a);
    out += ',';
    out += optional_cell(report.stddev_target_a);
    out += ',';
    out += optional_cell(report.stddev_source_b);
    out += ',';
    out += optional_cell(report.stddev_target_b);
    out += '\n';
    return out;
}

bool looks_like_points_csv(std::string_view first_line) {
    if (!first_line.empty() && first_line.back() == '\r')
        first_line.remove_suffix(1);
    return first_line == "x,y" || first_line.substr(0, 4) == "x,y," ||
           first_line == "cum_tokens,cum_types" ||
           first_line.substr(0, 21) == "cum_tokens,cum_types,";
}

std::vector<std::pair<double, double>> load_points_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw IngestError("empty CSV: missing header");
    line = strip_cr(line);
    if (!looks_like_points_csv(line))
        throw IngestError("unrecognized CSV header '" + line +
                          "': expected x,y or cum_tokens,cum_types");

    std::vector<std::pair<double, double>> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        auto cells = split_csv_line(line);
        if (cells.size() < 2)
            throw IngestError("expected at least 2 columns on CSV line " +
                              std::to_string(line_no));
        points.emplace_back(parse_double(cells[0], line_no), parse_double(cells[1], line_no));
    }
    return points;
}

GrowthCurve curve_from_points(const std::vector<std::pair<double, double>>& points) {
    GrowthCurve curve;
    curve.granularity = Granularity::FragmentLevel;
    curve.points.reserve(points.size());
    for (const auto& [tokens, types] : points) {
        if (!(tokens > 0.0) || !(types > 0.0) || tokens != std::floor(tokens) ||
            types != std::floor(types))
            throw IngestError("curve points must be positive integer counts");
        if (types > tokens)
            throw IngestError("curve point has more types than tokens");
        if (!curve.points.empty()) {
            if (static_cast<std::size_t>(tokens) <= curve.points.back().cum_tokens)
                throw IngestError("curve token counts must be strictly increasing");
            if (static_cast<std::size_t>(types) < curve.points.back().cum_types)
                throw IngestError("curve type counts must be non-decreasing");
        }
        CurvePoint p;
        p.cum_tokens = static_cast<std::size_t>(tokens);
        p.cum_types = static_cast<std::size_t>(types);
        p.ttr = static_cast<double>(p.cum_types) / static_cast<double>(p.cum_tokens);
        curve.points.push_back(p);
    }
    return curve;
}

PowerFit load_fit_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw IngestError(std::string("malformed fit JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
        !j["a"].is_number() || !j["b"].is_number())
        throw IngestError("fit JSON must be an object with numeric 'a' and 'b'");

    PowerFit fit;
    fit.a = j["a"].get<double>();
    fit.b = j["b"].get<double>();
    fit.r2 = (j.contains("r2") && j["r2"].is_number())
                 ? j["r2"].get<double>()
                 : std::numeric_limits<double>::quiet_NaN();
    fit.n_points = (j.contains("n_points") && j["n_points"].is_number_unsigned())
                       ? j["n_points"].get<std::size_t>()
                       : 0;
    return fit;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IngestError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IngestError("error while reading file: " + path.string());
    return std::move(buf).str();
}

void write_output(const std::string& path_or_dash, const std::string& content) {
    if (path_or_dash.empty() || path_or_dash == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout)
            throw IngestError("error writing report to standard output");
        return;
    }
    std::ofstream out(path_or_dash, std::ios::binary);
    if (!out)
        throw IngestError("cannot open output file: " + path_or_dash);
    out << content;
    out.flush();
    if (!out)
        throw IngestError("error writing output file: " + path_or_dash);
}

} // namespace lexdyn
