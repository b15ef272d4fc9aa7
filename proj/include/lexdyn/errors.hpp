#ifndef LEXDYN_ERRORS_HPP
#define LEXDYN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexdyn {

/// Base class for all lexdyn errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text loading, decoding, tokenization and chunking failures.
class IngestError : public Error {
public:
    static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

    explicit IngestError(const std::string& msg, std::size_t byte_offset = no_offset)
        : Error(byte_offset == no_offset
                    ? msg
                    : msg + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    /// Byte offset of the offending input position, or no_offset.
    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Lexical statistics over an invalid unit (e.g. an empty fragment).
class StatsError : public Error {
public:
    using Error::Error;
};

/// Degenerate or out-of-domain input to a regression/correlation routine.
class FitError : public Error {
public:
    using Error::Error;
};

/// Incompatible inputs to a pairwise or cohort comparison.
class CompareError : public Error {
public:
    using Error::Error;
};

/// Invalid synthetic-corpus specification.
class GenError : public Error {
public:
    using Error::Error;
};

} // namespace lexdyn

#endif
