#pragma once

#include <string>
#include <variant>
#include <vector>

#include "archtest/ols.hpp"
#include "archtest/time_series.hpp"

namespace archtest {

enum class BandwidthRule { PlugIn, CrossValidation };

/// Linear autoregression on the first `lags` lags.
struct ArModelSpec {
    int lags;
};

/// Polynomial regression in the first `lags` lags with all monomials of
/// total degree up to `order`.
struct TaylorModelSpec {
    int lags;
    int order;
};

/// Nadaraya-Watson kernel regression on the first `lags` lags.
struct NwModelSpec {
    int lags;
    BandwidthRule bandwidth;
};

/**
 * Which conditional-mean regression to fit before testing the residuals for
 * ARCH. Construct through the factories, which validate the parameters
 * (lags >= 1; polynomial order >= 2). A polynomial lag count above the order
 * is permitted.
 */
struct MeanModelSpec {
    std::variant<ArModelSpec, TaylorModelSpec, NwModelSpec> model;

    static MeanModelSpec ar(int lags);
    static MeanModelSpec taylor(int lags, int order);
    static MeanModelSpec nadaraya_watson(int lags, BandwidthRule rule);

    /// Number of lagged regressors (the model's own lag length).
    int lags() const;

    /// Display name, e.g. "AR(2)", "T3(2)", "NP_pl(2)", "NP_cv(2)".
    std::string label() const;
};

/// Fitted values and residuals of a mean regression over the usable sample.
struct RegressionFit {
    MeanModelSpec model;
    std::vector<double> fitted;
    std::vector<double> residuals;       // y_t - fitted_t, element-wise
    std::size_t effective_start = 0;     // first index of y with all lags available
    int n_params = 0;                    // 0 for the nonparametric fit
    bool rank_deficient = false;
};

struct LagDesign {
    Eigen::MatrixXd design;   // row t holds (y_{t-1}, ..., y_{t-lags})
    Eigen::VectorXd targets;  // y_t for t = lags+1 .. T
};

/// Lagged design matrix without an intercept column. Requires T > lags.
LagDesign lag_matrix(const TimeSeries& y, int lags);

/// OLS of y_t on an intercept and `lags` lags.
RegressionFit fit_ar(const TimeSeries& y, int lags);

/**
 * Design for the order-k polynomial regression in the first q lags:
 * an intercept, the lags themselves, and every distinct monomial
 * y_{t-j1} ... y_{t-jr} with 1 <= j1 <= ... <= jr <= q for r = 2..k.
 * Column count is C(q+k, k). k = 1 degenerates to the AR design.
 */
Eigen::MatrixXd taylor_design(const TimeSeries& y, int q, int k);

/// Monomial column count of taylor_design, C(q+k, k).
long taylor_column_count(int q, int k);

/// OLS on taylor_design. Rank-deficient designs are fitted minimum-norm and
/// flagged rather than rejected.
RegressionFit fit_taylor(const TimeSeries& y, int q, int k);

/// Dispatch on the spec; single fitting entry point for callers that hold a
/// MeanModelSpec.
RegressionFit fit_mean_model(const TimeSeries& y, const MeanModelSpec& spec);

}  // namespace archtest
