#ifndef LEXDYN_SYNTHGEN_HPP
#define LEXDYN_SYNTHGEN_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lexdyn/errors.hpp"

namespace lexdyn {

/// Parameters of a synthetic Zipf corpus. Rank r is drawn with
/// probability r^(-exponent) / H, H = sum over r = 1..vocab_size of
/// r^(-exponent).
struct ZipfSpec {
    std::size_t vocab_size = 0;  // >= 2
    double exponent = 0.0;       // > 0
    std::size_t n_tokens = 0;    // >= 1
    std::uint64_t seed = 0;
};

/// Synthetic type label of a rank. Digits would be stripped by the
/// tokenizer, so the decimal digits of the rank are letter-encoded
/// with 'a'..'j': rank 1 -> "wb", rank 42 -> "wec", rank 10000 ->
/// "wbaaaa". Labels survive a round trip through ingest unchanged.
std::string zipf_type_label(std::size_t rank);

/// Seeded sampler over ranks 1..vocab_size.
///
/// The generation algorithm is pinned so identical specs produce
/// identical corpora on any conforming platform:
///   - RNG: std::mt19937_64 (64-bit Mersenne Twister as specified by
///     the C++ standard), seeded directly with ZipfSpec::seed;
///   - uniform doubles: (x >> 11) * 2^-53, x the raw 64-bit draw;
///   - rank selection: std::upper_bound over the cumulative weights
///     sum(r^-s), accumulated in rank order as doubles.
class ZipfSampler {
public:
    explicit ZipfSampler(const ZipfSpec& spec); // throws GenError on invalid fields

    /// Probability of drawing `rank` (1-based).
    double probability(std::size_t rank) const;

    /// H = sum of r^(-s) over the vocabulary.
    double total_weight() const { return cdf_.back(); }

    /// Next rank of the stream, in 1..vocab_size.
    std::size_t next_rank();

private:
    std::vector<double> cdf_; // cumulative unnormalized weights
    double exponent_;
    std::mt19937_64 rng_;
};

/// Exactly spec.n_tokens tokens drawn i.i.d. from the Zipf
/// distribution. Pure function of the spec, including the seed.
std::vector<std::string> zipf_text(const ZipfSpec& spec);

} // namespace lexdyn

#endif
