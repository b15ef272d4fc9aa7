#include "lexdyn/fitting.hpp"

#include <algorithm>
#include <cmath>

namespace lexdyn {

PowerFit power_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2)
        throw FitError("need at least 2 points");

    std::vector<double> lx(points.size()), ly(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [x, y] = points[i];
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
            throw FitError("log domain");
        lx[i] = std::log(x);
        ly[i] = std::log(y);
    }

    const auto n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = lx[i] - mx;
        const double dy = ly[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0)
        throw FitError("degenerate abscissa");

    PowerFit fit;
    fit.b = sxy / sxx;
    fit.a = std::exp(my - fit.b * mx);
    // syy == 0 means all y equal: the horizontal line reproduces the
    // data exactly, so the fit is perfect.
    fit.r2 = (syy == 0.0) ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    fit.n_points = points.size();
    return fit;
}

double predict(const PowerFit& fit, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw FitError("predict requires x > 0");
    return fit.a * std::pow(x, fit.b);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw FitError("series length mismatch");
    if (xs.size() < 2)
        throw FitError("need at least 2 observations");

    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw FitError("zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

} // namespace lexdyn
