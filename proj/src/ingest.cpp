#include "lexdyn/ingest.hpp"

#include <regex>
#include <utility>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace lexdyn {

namespace {

void append_utf8(std::string& out, UChar32 cp) {
    char buf[U8_MAX_LENGTH];
    std::int32_t n = 0;
    U8_APPEND_UNSAFE(buf, n, cp);
    out.append(buf, static_cast<std::size_t>(n));
}

UChar32 decode_next(std::string_view text, std::int32_t& i) {
    const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
    const auto len = static_cast<std::int32_t>(text.size());
    std::int32_t start = i;
    UChar32 cp;
    U8_NEXT(s, i, len, cp);
    if (cp < 0)
        throw IngestError("invalid UTF-8 sequence", static_cast<std::size_t>(start));
    return cp;
}

bool is_joiner(UChar32 cp) {
    return cp == U'\'' || cp == 0x2019 /* right single quotation mark */ || cp == U'-';
}

} // namespace

std::string normalize(std::string_view raw_text) {
    std::string out;
    out.reserve(raw_text.size());
    std::int32_t i = 0;
    const auto len = static_cast<std::int32_t>(raw_text.size());
    while (i < len) {
        UChar32 cp = decode_next(raw_text, i);
        if (cp == U'\r') {
            if (i < len && raw_text[static_cast<std::size_t>(i)] == '\n')
                ++i;
            out.push_back('\n');
            continue;
        }
        append_utf8(out, u_foldCase(cp, U_FOLD_CASE_DEFAULT));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view normalized_text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::int32_t i = 0;
    const auto len = static_cast<std::int32_t>(normalized_text.size());
    while (i < len) {
        UChar32 cp = decode_next(normalized_text, i);
        if (u_isalpha(cp)) {
            append_utf8(cur, cp);
            continue;
        }
        if (is_joiner(cp) && !cur.empty() && i < len) {
            // Keep the joiner only when a letter follows directly.
            std::int32_t peek = i;
            const auto* s = reinterpret_cast<const std::uint8_t*>(normalized_text.data());
            UChar32 next;
            U8_NEXT(s, peek, len, next);
            if (next >= 0 && u_isalpha(next)) {
                cur.push_back(cp == U'-' ? '-' : '\'');
                continue;
            }
        }
        if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty())
        tokens.push_back(std::move(cur));
    return tokens;
}

Document make_document(std::string id, std::string_view raw_text) {
    // Validate the whole input up front so error offsets are absolute.
    {
        std::int32_t i = 0;
        const auto len = static_cast<std::int32_t>(raw_text.size());
        while (i < len)
            decode_next(raw_text, i);
    }

    Document doc;
    doc.id = std::move(id);

    // Split into raw lines. A trailing newline terminates the last line
    // rather than opening an empty one. Multibyte UTF-8 sequences never
    // contain 0x0A/0x0D bytes, so a byte scan is safe.
    std::size_t pos = 0;
    while (pos < raw_text.size()) {
        std::size_t eol = raw_text.find_first_of("\r\n", pos);
        if (eol == std::string_view::npos) {
            doc.lines.emplace_back(raw_text.substr(pos));
            break;
        }
        doc.lines.emplace_back(raw_text.substr(pos, eol - pos));
        if (raw_text[eol] == '\r' && eol + 1 < raw_text.size() && raw_text[eol + 1] == '\n')
            ++eol;
        pos = eol + 1;
    }

    doc.line_token_begin.reserve(doc.lines.size() + 1);
    doc.line_token_begin.push_back(0);
    for (const auto& line : doc.lines) {
        auto toks = tokenize(normalize(line));
        doc.tokens.insert(doc.tokens.end(),
                          std::make_move_iterator(toks.begin()),
                          std::make_move_iterator(toks.end()));
        doc.line_token_begin.push_back(doc.tokens.size());
    }
    return doc;
}

namespace {

Fragment make_fragment(const Document& doc, std::size_t index,
                       std::size_t first_line, std::size_t end_line) {
    Fragment frag;
    frag.index = index;
    const std::size_t tok_begin = doc.line_token_begin[first_line];
    const std::size_t tok_end = doc.line_token_begin[end_line];
    frag.tokens.assign(doc.tokens.begin() + static_cast<std::ptrdiff_t>(tok_begin),
                       doc.tokens.begin() + static_cast<std::ptrdiff_t>(tok_end));
    return frag;
}

} // namespace

std::vector<Fragment> chunk_by_lines(const Document& doc, std::size_t n_lines) {
    if (doc.lines.empty())
        throw IngestError("empty document: nothing to chunk");
    if (n_lines == 0)
        throw IngestError("n_lines must be >= 1");

    std::vector<Fragment> fragments;
    for (std::size_t first = 0; first < doc.lines.size(); first += n_lines) {
        std::size_t end = std::min(first + n_lines, doc.lines.size());
        fragments.push_back(make_fragment(doc, fragments.size() + 1, first, end));
    }
    return fragments;
}

std::vector<Fragment> chunk_by_delimiter(const Document& doc, const std::string& pattern) {
    if (doc.lines.empty())
        throw IngestError("empty document: nothing to chunk");

    std::regex re;
    try {
        re = std::regex(pattern);
    } catch (const std::regex_error& e) {
        throw IngestError(std::string("invalid pattern: ") + e.what());
    }

    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
        if (std::regex_search(doc.lines[i], re))
            starts.push_back(i);
    }

    std::vector<Fragment> fragments;
    if (starts.empty()) {
        fragments.push_back(make_fragment(doc, 1, 0, doc.lines.size()));
        return fragments;
    }
    if (starts.front() > 0)
        fragments.push_back(make_fragment(doc, 1, 0, starts.front()));
    for (std::size_t k = 0; k < starts.size(); ++k) {
        std::size_t end = (k + 1 < starts.size()) ? starts[k + 1] : doc.lines.size();
        fragments.push_back(make_fragment(doc, fragments.size() + 1, starts[k], end));
    }
    return fragments;
}

} // namespace lexdyn
