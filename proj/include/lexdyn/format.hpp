#ifndef LEXDYN_FORMAT_HPP
#define LEXDYN_FORMAT_HPP

#include <string>

namespace lexdyn {

/// Shortest decimal string that round-trips to the same double.
/// Locale-independent; always uses '.' as the decimal separator.
std::string format_double(double v);

/// Fixed-point rendering with the given number of decimals, e.g.
/// format_fixed(0.25682, 2) == "0.26". Locale-independent.
std::string format_fixed(double v, int decimals);

/// Value rounded to two decimals (display convention for ratios/shares).
double round2(double v);

} // namespace lexdyn

#endif
