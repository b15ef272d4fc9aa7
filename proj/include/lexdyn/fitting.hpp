#ifndef LEXDYN_FITTING_HPP
#define LEXDYN_FITTING_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lexdyn/errors.hpp"

namespace lexdyn {

/// Result of a power-law fit y = a * x^b, obtained by ordinary least
/// squares of ln y on ln x. r2 is the coefficient of determination in
/// log-log space; for exactly power-law data it is 1.
struct PowerFit {
    double a = 0.0;
    double b = 0.0;
    double r2 = 0.0;
    std::size_t n_points = 0;
};

/// Log-log OLS fit over (x, y) points. All coordinates must be finite
/// and positive and at least two x values must differ.
///
/// Throws FitError("log domain") on a non-positive or non-finite
/// coordinate and FitError("degenerate abscissa") when all x coincide.
/// When all y coincide the horizontal line fits the data exactly and
/// r2 is reported as 1.
PowerFit power_fit(std::span<const std::pair<double, double>> points);

/// a * x^b for x > 0; throws FitError otherwise.
double predict(const PowerFit& fit, double x);

/// Sample Pearson correlation coefficient of two equally long series
/// (length >= 2, nonzero variance each). Throws FitError otherwise.
double pearson(std::span<const double> xs, std::span<const double> ys);

} // namespace lexdyn

#endif
