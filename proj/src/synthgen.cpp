#include "lexdyn/synthgen.hpp"

#include <algorithm>
#include <cmath>

namespace lexdyn {

std::string zipf_type_label(std::size_t rank) {
    std::string digits = std::to_string(rank);
    std::string label = "w";
    label.reserve(digits.size() + 1);
    for (char d : digits)
        label.push_back(static_cast<char>('a' + (d - '0')));
    return label;
}

ZipfSampler::ZipfSampler(const ZipfSpec& spec)
    : exponent_(spec.exponent), rng_(spec.seed) {
    if (spec.vocab_size < 2)
        throw GenError("vocab_size must be >= 2");
    if (!(spec.exponent > 0.0) || !std::isfinite(spec.exponent))
        throw GenError("exponent must be a positive finite number");
    if (spec.n_tokens < 1)
        throw GenError("n_tokens must be >= 1");

    cdf_.reserve(spec.vocab_size);
    double acc = 0.0;
    for (std::size_t r = 1; r <= spec.vocab_size; ++r) {
        acc += std::pow(static_cast<double>(r), -exponent_);
        cdf_.push_back(acc);
    }
}

double ZipfSampler::probability(std::size_t rank) const {
    return std::pow(static_cast<double>(rank), -exponent_) / cdf_.back();
}

std::size_t ZipfSampler::next_rank() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53; // [0, 1)
    const double x = u * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
    if (it == cdf_.end())
        --it; // u * H rounded up to H
    return static_cast<std::size_t>(it - cdf_.begin()) + 1;
}

std::vector<std::string> zipf_text(const ZipfSpec& spec) {
    ZipfSampler sampler(spec);
    std::vector<std::string> tokens;
    tokens.reserve(spec.n_tokens);
    for (std::size_t i = 0; i < spec.n_tokens; ++i)
        tokens.push_back(zipf_type_label(sampler.next_rank()));
    return tokens;
}

} // namespace lexdyn
