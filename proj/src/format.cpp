#include "lexdyn/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace lexdyn {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec; // 64 bytes always suffice for a double
    return std::string(buf, ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::fixed, decimals);
    (void)ec;
    return std::string(buf, ptr);
}

double round2(double v) {
    return std::round(v * 100.0) / 100.0;
}

} // namespace lexdyn
