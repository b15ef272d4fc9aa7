#ifndef LEXDYN_INGEST_HPP
#define LEXDYN_INGEST_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lexdyn/errors.hpp"

namespace lexdyn {

/// A loaded text: raw lines plus the case-folded word tokens derived
/// from them.
///
/// `lines` keep the original spelling (line terminators stripped) so
/// chapter patterns can match against the text as written. `tokens`
/// are case-folded and ordered; tokens of line i occupy
/// [line_token_begin[i], line_token_begin[i + 1]) within `tokens`.
struct Document {
    std::string id;
    std::vector<std::string> lines;
    std::vector<std::string> tokens;
    std::vector<std::size_t> line_token_begin; // size lines.size() + 1
};

/// A contiguous slice of a Document, 1-based and contiguous by index.
/// Concatenating all fragments of a chunking in index order reproduces
/// the document's token sequence exactly.
struct Fragment {
    std::size_t index = 0; // 1-based
    std::vector<std::string> tokens;
};

/// Unicode simple case folding plus newline normalization (\r\n and
/// \r become \n). Nothing else is touched: no lemmatization, no
/// punctuation stripping. Idempotent.
///
/// Throws IngestError with the byte offset on invalid UTF-8.
std::string normalize(std::string_view raw_text);

/// Split normalized text into word tokens.
///
/// A token is a maximal run of Unicode letters; a single apostrophe
/// (U+0027, or U+2019 which is emitted as U+0027) or hyphen-minus is
/// kept inside a token when a letter follows it directly. Digits,
/// punctuation, symbols and whitespace separate tokens. Tokens never
/// start or end with an apostrophe or hyphen.
std::vector<std::string> tokenize(std::string_view normalized_text);

/// Build a Document from raw text: validates UTF-8, splits into lines,
/// and tokenizes each line of normalize(raw_text).
Document make_document(std::string id, std::string_view raw_text);

/// Fragments of n_lines consecutive lines each; the last fragment
/// takes the remainder. Throws IngestError on an empty document or
/// n_lines == 0.
std::vector<Fragment> chunk_by_lines(const Document& doc, std::size_t n_lines);

/// A new fragment starts at every raw line containing a match of
/// `pattern` (ECMAScript regex, regex_search semantics); the matching
/// line belongs to the fragment it opens. Lines before the first
/// match form fragment 1. No matching line at all yields a single
/// fragment covering the whole document. Fragments with zero tokens
/// (e.g. two adjacent delimiter lines) are retained; summarising them
/// downstream is an error rather than a silent skip.
///
/// Throws IngestError on an invalid pattern or an empty document.
std::vector<Fragment> chunk_by_delimiter(const Document& doc, const std::string& pattern);

} // namespace lexdyn

#endif
