// lexdyn: lexical-dynamics statistics for texts and parallel corpora.
//
// Subcommands: analyze, curve, fit, compare, levelling, synth.
// Exit codes: 0 report written, 2 I/O or malformed input, 3 empty
// input, 4 degenerate fit, 5 comparison mismatch.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexdyn/compare.hpp"
#include "lexdyn/fitting.hpp"
#include "lexdyn/format.hpp"
#include "lexdyn/growth.hpp"
#include "lexdyn/ingest.hpp"
#include "lexdyn/lexstats.hpp"
#include "lexdyn/report.hpp"
#include "lexdyn/synthgen.hpp"

namespace fs = std::filesystem;
using lexdyn::json;

namespace {

struct ChunkOptions {
    std::size_t lines = 0;      // --chunk-lines
    std::string pattern;        // --chunk-pattern
    std::size_t step = 0;       // --step

    bool has_fragment_mode() const { return lines > 0 || !pattern.empty(); }
    bool has_any() const { return has_fragment_mode() || step > 0; }
};

void add_chunk_flags(CLI::App* cmd, ChunkOptions& opts, bool with_step) {
    auto* lines = cmd->add_option("--chunk-lines", opts.lines,
                                  "Split the text into fragments of N lines")
                      ->check(CLI::PositiveNumber);
    auto* pattern = cmd->add_option("--chunk-pattern", opts.pattern,
                                    "Start a new fragment at every line matching this regex");
    lines->excludes(pattern);
    pattern->excludes(lines);
    if (with_step) {
        auto* step = cmd->add_option(
            "--step", opts.step, "Emit a curve point after every N tokens instead of chunking");
        step->check(CLI::PositiveNumber);
        step->excludes(lines)->excludes(pattern);
        lines->excludes(step);
        pattern->excludes(step);
    }
}

lexdyn::Document load_document(const std::string& path) {
    std::string text = lexdyn::read_file(path);
    return lexdyn::make_document(fs::path(path).filename().string(), text);
}

std::vector<lexdyn::Fragment> chunk_document(const lexdyn::Document& doc,
                                             const ChunkOptions& opts) {
    if (opts.lines > 0)
        return lexdyn::chunk_by_lines(doc, opts.lines);
    return lexdyn::chunk_by_delimiter(doc, opts.pattern);
}

void require_tokens(const lexdyn::Document& doc) {
    if (doc.tokens.empty())
        throw lexdyn::StatsError("empty input: '" + doc.id + "' has no word tokens");
}

// A comparison/fit input is either a points CSV or a plain text.
bool is_points_csv(const std::string& content) {
    std::string_view view(content);
    std::size_t eol = view.find('\n');
    return lexdyn::looks_like_points_csv(view.substr(0, eol));
}

lexdyn::GrowthCurve load_curve_input(const std::string& path, const ChunkOptions& opts) {
    std::string content = lexdyn::read_file(path);
    if (is_points_csv(content)) {
        std::istringstream in(content);
        return lexdyn::curve_from_points(lexdyn::load_points_csv(in));
    }
    auto doc = lexdyn::make_document(fs::path(path).filename().string(), content);
    require_tokens(doc);
    if (opts.step > 0)
        return lexdyn::growth_curve(doc.tokens, opts.step);
    if (opts.has_fragment_mode())
        return lexdyn::cumulative_curve(chunk_document(doc, opts));
    throw lexdyn::IngestError("'" + path +
                              "' is a text input: pass --chunk-lines, --chunk-pattern or --step");
}

lexdyn::PowerFit fit_of_input(const std::string& path, const ChunkOptions& opts) {
    if (fs::path(path).extension() == ".json") {
        std::istringstream in(lexdyn::read_file(path));
        return lexdyn::load_fit_json(in);
    }
    std::string content = lexdyn::read_file(path);
    if (is_points_csv(content)) {
        std::istringstream in(content);
        return lexdyn::power_fit(lexdyn::load_points_csv(in));
    }
    auto curve = load_curve_input(path, opts);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(curve.points.size());
    for (const auto& p : curve.points)
        pts.emplace_back(static_cast<double>(p.cum_tokens), static_cast<double>(p.cum_types));
    return lexdyn::power_fit(pts);
}

std::vector<std::string> read_manifest(const std::string& path) {
    std::istringstream in(lexdyn::read_file(path));
    const fs::path base = fs::path(path).parent_path();
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        fs::path entry(line);
        entries.push_back(entry.is_absolute() ? entry.string() : (base / entry).string());
    }
    if (entries.empty())
        throw lexdyn::IngestError("manifest '" + path + "' lists no inputs");
    return entries;
}

int cmd_analyze(const std::string& input, const ChunkOptions& chunk, const std::string& format,
                const std::string& out, const std::string& freq_out) {
    auto doc = load_document(input);
    require_tokens(doc);

    const auto whole = lexdyn::summary(doc.tokens);
    std::optional<std::vector<lexdyn::LexSummary>> fragments;
    if (chunk.has_fragment_mode())
        fragments = lexdyn::fragment_table(chunk_document(doc, chunk));

    std::string rendered;
    if (format == "json") {
        json j;
        j["input"] = doc.id;
        j["whole"] = lexdyn::to_json(whole);
        if (fragments) {
            json rows = json::array();
            for (std::size_t i = 0; i < fragments->size(); ++i) {
                json row;
                row["fragment"] = i + 1;
                row.update(lexdyn::to_json((*fragments)[i]));
                rows.push_back(std::move(row));
            }
            j["fragments"] = std::move(rows);
        }
        rendered = lexdyn::render_json(j);
    } else {
        rendered = lexdyn::summary_csv_header();
        if (fragments) {
            for (std::size_t i = 0; i < fragments->size(); ++i)
                rendered += lexdyn::summary_csv_row(std::to_string(i + 1), (*fragments)[i]);
        }
        rendered += lexdyn::summary_csv_row("whole", whole);
    }
    lexdyn::write_output(out, rendered);

    if (!freq_out.empty()) {
        const auto table = lexdyn::frequency_table(doc.tokens);
        lexdyn::write_output(freq_out, lexdyn::freq_csv(table));
    }
    return 0;
}

int cmd_curve(const std::string& input, const ChunkOptions& chunk, const std::string& format,
              const std::string& out) {
    auto doc = load_document(input);
    require_tokens(doc);

    lexdyn::GrowthCurve curve;
    if (chunk.step > 0)
        curve = lexdyn::growth_curve(doc.tokens, chunk.step);
    else
        curve = lexdyn::cumulative_curve(chunk_document(doc, chunk));

    lexdyn::write_output(out, format == "json" ? lexdyn::render_json(lexdyn::to_json(curve))
                                               : lexdyn::curve_csv(curve));
    return 0;
}

int cmd_fit(const std::string& input, const std::string& format, const std::string& out) {
    std::istringstream in(lexdyn::read_file(input));
    const auto fit = lexdyn::power_fit(lexdyn::load_points_csv(in));
    lexdyn::write_output(out, format == "json" ? lexdyn::render_json(lexdyn::to_json(fit))
                                               : lexdyn::fit_csv(fit));
    return 0;
}

int cmd_compare(const std::string& source, const std::string& target, const ChunkOptions& chunk,
                const std::string& format, const std::string& out) {
    const auto source_curve = load_curve_input(source, chunk);
    const auto target_curve = load_curve_input(target, chunk);
    const auto report = lexdyn::compare_pair(source_curve, target_curve);
    lexdyn::write_output(out, format == "json" ? lexdyn::render_json(lexdyn::to_json(report))
                                               : lexdyn::pair_csv(report));
    return 0;
}

int cmd_levelling(const std::string& sources, const std::string& targets,
                  const ChunkOptions& chunk, const std::string& format, const std::string& out) {
    std::vector<lexdyn::PowerFit> source_fits, target_fits;
    for (const auto& path : read_manifest(sources))
        source_fits.push_back(fit_of_input(path, chunk));
    for (const auto& path : read_manifest(targets))
        target_fits.push_back(fit_of_input(path, chunk));

    const auto report = lexdyn::levelling_out(source_fits, target_fits);
    lexdyn::write_output(out, format == "json" ? lexdyn::render_json(lexdyn::to_json(report))
                                               : lexdyn::levelling_csv(report));
    return 0;
}

int cmd_synth(std::size_t vocab, double exponent, std::size_t tokens, std::uint64_t seed,
              const std::string& out) {
    lexdyn::ZipfSpec spec{vocab, exponent, tokens, seed};
    const auto corpus = lexdyn::zipf_text(spec);

    // Fixed line width: 20 space-separated tokens per line.
    constexpr std::size_t kTokensPerLine = 20;
    std::string text;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        text += corpus[i];
        text += ((i + 1) % kTokensPerLine == 0 || i + 1 == corpus.size()) ? '\n' : ' ';
    }
    lexdyn::write_output(out, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexical-dynamics statistics for texts and parallel corpora"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 2 I/O or malformed input, 3 empty input, "
               "4 degenerate fit, 5 comparison mismatch.");

    std::string input, second_input, out, freq_out;
    std::string format = "csv";
    ChunkOptions chunk;
    std::size_t vocab = 0, n_tokens = 0;
    double exponent = 0.0;
    std::uint64_t seed = 0;

    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Report format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };
    const auto add_out = [&out](CLI::App* cmd) {
        cmd->add_option("--out", out, "Output path ('-' or omitted: stdout)");
    };

    auto* analyze = app.add_subcommand(
        "analyze", "Whole-text summary (types, tokens, TTR, hapax); with a chunk mode, "
                   "also one row per fragment");
    analyze->add_option("input", input, "UTF-8 text file")->required();
    add_chunk_flags(analyze, chunk, false);
    analyze->add_option("--freq-out", freq_out,
                        "Also write the ranked frequency table (CSV: rank,type,frequency)");
    add_format(analyze);
    add_out(analyze);

    auto* curve = app.add_subcommand(
        "curve", "Vocabulary growth curve: cumulative over fragments, or every --step tokens");
    curve->add_option("input", input, "UTF-8 text file")->required();
    add_chunk_flags(curve, chunk, true);
    add_format(curve);
    add_out(curve);

    auto* fit = app.add_subcommand(
        "fit", "Power-law fit y = a*x^b of a points CSV (header x,y or cum_tokens,cum_types)");
    fit->add_option("input", input, "Points CSV file")->required();
    add_format(fit);
    add_out(fit);

    auto* compare = app.add_subcommand(
        "compare", "Pairwise source/translation comparison of two index-aligned curves "
                   "(curve CSVs, or texts with a chunk mode)");
    compare->add_option("source", input, "Source curve CSV or text")->required();
    compare->add_option("target", second_input, "Target curve CSV or text")->required();
    add_chunk_flags(compare, chunk, true);
    add_format(compare);
    add_out(compare);

    auto* levelling = app.add_subcommand(
        "levelling", "Coefficient-dispersion report over two cohorts; manifests list one "
                     "input per line (fit JSON, curve CSV, or text)");
    levelling->add_option("sources", input, "Manifest of source inputs")->required();
    levelling->add_option("targets", second_input, "Manifest of target inputs")->required();
    add_chunk_flags(levelling, chunk, true);
    add_format(levelling);
    add_out(levelling);

    auto* synth = app.add_subcommand(
        "synth", "Seeded synthetic corpus drawn from a Zipf distribution "
                 "(20 space-separated tokens per line)");
    synth->add_option("--vocab", vocab, "Vocabulary size (>= 2)")->required();
    synth->add_option("--exponent", exponent, "Zipf exponent (> 0)")->required();
    synth->add_option("--tokens", n_tokens, "Number of tokens (>= 1)")->required();
    synth->add_option("--seed", seed, "RNG seed")->capture_default_str();
    add_out(synth);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(input, chunk, format, out, freq_out);
        if (curve->parsed()) {
            if (!chunk.has_any())
                throw lexdyn::IngestError("curve requires --chunk-lines, --chunk-pattern or --step");
            return cmd_curve(input, chunk, format, out);
        }
        if (fit->parsed())
            return cmd_fit(input, format, out);
        if (compare->parsed())
            return cmd_compare(input, second_input, chunk, format, out);
        if (levelling->parsed())
            return cmd_levelling(input, second_input, chunk, format, out);
        if (synth->parsed())
            return cmd_synth(vocab, exponent, n_tokens, seed, out);
    } catch (const lexdyn::StatsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lexdyn::FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const lexdyn::CompareError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const lexdyn::Error& e) {
        // IngestError and GenError: input/usage problems
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
