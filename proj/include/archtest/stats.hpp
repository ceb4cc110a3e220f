#pragma once

#include <span>
#include <vector>

namespace archtest {

double sample_mean(std::span<const double> x);

/// Unbiased sample variance (n - 1 denominator).
double sample_variance(std::span<const double> x);

double sample_std(std::span<const double> x);

/**
 * Linear-interpolation quantile of the sorted sample at index
 * h = (n - 1) p + 1 (1-based), i.e. R's "type 7". p must lie in [0, 1].
 */
double quantile(std::vector<double> x, double p);

/// Q3 - Q1 under the quantile convention above. Requires >= 4 observations.
double interquartile_range(std::span<const double> x);

/// P(X > x) for X ~ chi-square(df). Absolute error below 1e-10.
double chi2_survival(double x, int df);

}  // namespace archtest
