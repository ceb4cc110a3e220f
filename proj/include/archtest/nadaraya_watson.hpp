#pragma once

#include <array>
#include <optional>
#include <span>

#include "archtest/mean_models.hpp"

namespace archtest {

/// Standard normal density, the kernel used throughout.
double gaussian_kernel(double u);

struct BandwidthSelection {
    std::vector<double> per_dimension_h;  // one bandwidth per regressor column
    BandwidthRule rule = BandwidthRule::PlugIn;
    /// CV(h) at the selected bandwidth; set only by cv_bandwidth.
    std::optional<double> cv_objective_value;
};

/**
 * Plug-in rule applied per regressor column j:
 *   h_j = 1.06 min(sd_j, iqr_j / 1.34) T^(-1/(s+4)),
 * with T the number of rows and s the number of columns. A zero-dispersion
 * column makes the rule degenerate and is rejected.
 */
BandwidthSelection plugin_bandwidth(const Eigen::MatrixXd& regressors);

/// Candidate bandwidths for cross-validation, as multiples of the plug-in h.
inline constexpr std::array<double, 7> kCvBandwidthMultipliers{0.25, 0.5, 0.75,
                                                               1.0,  1.5, 2.0, 3.0};

/**
 * Leave-one-out cross-validation over candidate bandwidths h = m * h_plugin,
 * scaled jointly across dimensions by each multiplier m. Returns the grid
 * minimizer of CV(h) = (1/n) sum_i (y_i - zhat_{-i})^2; ties go to the
 * smallest candidate. Fails only if every candidate leaves some observation
 * without a usable prediction.
 */
BandwidthSelection cv_bandwidth(const TimeSeries& y, int lags,
                                std::span<const double> multipliers = kCvBandwidthMultipliers);

/**
 * In-sample Nadaraya-Watson regression of y_t on its first `lags` lags with
 * a product Gaussian kernel. The fitted value at t averages over all usable
 * observations including t itself; leave-one-out smoothing is used only
 * inside cv_bandwidth.
 */
RegressionFit nw_fit(const TimeSeries& y, int lags, const BandwidthSelection& bw);

}  // namespace archtest
