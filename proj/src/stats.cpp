#include "archtest/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace archtest {

double sample_mean(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("sample_mean: empty sample");
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
    if (x.size() < 2) {
        throw std::invalid_argument("sample_variance: need at least 2 observations");
    }
    const double m = sample_mean(x);
    double ss = 0.0;
    for (double v : x) {
        const double d = v - m;
        ss += d * d;
    }
    return ss / static_cast<double>(x.size() - 1);
}

double sample_std(std::span<const double> x) { return std::sqrt(sample_variance(x)); }

double quantile(std::vector<double> x, double p) {
    if (x.empty()) {
        throw std::invalid_argument("quantile: empty sample");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("quantile: p outside [0, 1]");
    }
    std::sort(x.begin(), x.end());
    const double h = (static_cast<double>(x.size()) - 1.0) * p;  // 0-based index
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, x.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return x[lo] + frac * (x[hi] - x[lo]);
}

double interquartile_range(std::span<const double> x) {
    if (x.size() < 4) {
        throw std::invalid_argument("interquartile_range: need at least 4 observations");
    }
    std::vector<double> copy(x.begin(), x.end());
    std::sort(copy.begin(), copy.end());
    const auto at = [&](double p) {
        const double h = (static_cast<double>(copy.size()) - 1.0) * p;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const auto hi = std::min(lo + 1, copy.size() - 1);
        return copy[lo] + (h - static_cast<double>(lo)) * (copy[hi] - copy[lo]);
    };
    return at(0.75) - at(0.25);
}

double chi2_survival(double x, int df) {
    if (x < 0.0) {
        throw std::invalid_argument("chi2_survival: x must be non-negative");
    }
    if (df < 1) {
        throw std::invalid_argument("chi2_survival: df must be positive");
    }
    // Regularized upper incomplete gamma Q(df/2, x/2).
    return boost::math::gamma_q(0.5 * static_cast<double>(df), 0.5 * x);
}

}  // namespace archtest
