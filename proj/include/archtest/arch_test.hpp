#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "archtest/mean_models.hpp"
#include "archtest/time_series.hpp"

namespace archtest {

/// Squared residuals carry no variation, so the auxiliary regression of the
/// LM test is undefined.
class DegenerateResidualsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of the LM test for ARCH(p) on a residual series.
struct ArchTestResult {
    double lm_stat = 0.0;
    int df = 0;
    double p_value = 1.0;
    double level = 0.05;     // level the reject flag refers to
    bool reject = false;
    std::size_t n_used = 0;  // rows of the auxiliary regression

    bool reject_at(double alpha) const { return p_value < alpha; }
};

/**
 * Engle's LM test for ARCH(p): regress squared residuals on an intercept and
 * p of their own lags over the n = length - p usable rows; the statistic is
 * n R^2, asymptotically chi-square(p) under homoskedasticity. Identical to
 * the score-form quadratic statistic with the squared-residual mean taken
 * over the same window.
 */
ArchTestResult lm_arch_test(const std::vector<double>& residuals, int p,
                            double level = 0.05);

/// Fit the mean model, extract its residuals and test them for ARCH(p).
/// Single entry point used by the Monte Carlo engine and the CLI.
ArchTestResult arch_test_pipeline(const TimeSeries& y, const MeanModelSpec& model,
                                  int p, double level = 0.05);

}  // namespace archtest
