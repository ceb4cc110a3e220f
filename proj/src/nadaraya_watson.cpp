#include "archtest/nadaraya_watson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "archtest/stats.hpp"

namespace archtest {

double gaussian_kernel(double u) {
    return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
}

namespace {

// min(sd, iqr/1.34) per column; the dispersion entering the plug-in rule.
std::vector<double> robust_dispersion(const Eigen::MatrixXd& regressors) {
    std::vector<double> out(static_cast<std::size_t>(regressors.cols()));
    std::vector<double> col(static_cast<std::size_t>(regressors.rows()));
    for (long j = 0; j < regressors.cols(); ++j) {
        for (long i = 0; i < regressors.rows(); ++i) {
            col[static_cast<std::size_t>(i)] = regressors(i, j);
        }
        const double sd = sample_std(col);
        const double iqr = interquartile_range(col);
        out[static_cast<std::size_t>(j)] = std::min(sd, iqr / 1.34);
    }
    return out;
}

std::vector<double> plugin_h(const Eigen::MatrixXd& regressors, bool allow_degenerate) {
    const long T = regressors.rows();
    const long s = regressors.cols();
    if (T < 8) {
        throw std::invalid_argument("plugin_bandwidth: need at least 8 rows");
    }
    const double rate = std::pow(static_cast<double>(T),
                                 -1.0 / (static_cast<double>(s) + 4.0));
    auto dispersion = robust_dispersion(regressors);
    for (long j = 0; j < s; ++j) {
        auto& d = dispersion[static_cast<std::size_t>(j)];
        if (d <= 0.0) {
            if (!allow_degenerate) {
                throw std::invalid_argument(
                    "plugin_bandwidth: zero-dispersion regressor column " +
                    std::to_string(j));
            }
            // Degenerate column: the kernel sees identical values whatever
            // the bandwidth, so any positive scale works.
            d = 1.0 / (1.06 * rate);
        }
        d *= 1.06 * rate;
    }
    return dispersion;
}

// Squared scaled distance between rows a and b of z (columns pre-divided by h).
inline double scaled_dist2(const Eigen::MatrixXd& z, long a, long b) {
    double d2 = 0.0;
    for (long j = 0; j < z.cols(); ++j) {
        const double d = z(a, j) - z(b, j);
        d2 += d * d;
    }
    return d2;
}

Eigen::MatrixXd scale_columns(const Eigen::MatrixXd& design, std::span<const double> h) {
    Eigen::MatrixXd z = design;
    for (long j = 0; j < z.cols(); ++j) {
        z.col(j) /= h[static_cast<std::size_t>(j)];
    }
    return z;
}

}  // namespace

BandwidthSelection plugin_bandwidth(const Eigen::MatrixXd& regressors) {
    BandwidthSelection out;
    out.per_dimension_h = plugin_h(regressors, /*allow_degenerate=*/false);
    out.rule = BandwidthRule::PlugIn;
    return out;
}

BandwidthSelection cv_bandwidth(const TimeSeries& y, int lags,
                                std::span<const double> multipliers) {
    if (multipliers.empty()) {
        throw std::invalid_argument("cv_bandwidth: empty candidate grid");
    }
    auto lagged = lag_matrix(y, lags);
    const long n = lagged.design.rows();
    if (n < 2) {
        throw std::invalid_argument("cv_bandwidth: too few usable observations");
    }
    const auto base_h = plugin_h(lagged.design, /*allow_degenerate=*/true);

    std::vector<double> grid(multipliers.begin(), multipliers.end());
    std::sort(grid.begin(), grid.end());

    double best_cv = std::numeric_limits<double>::infinity();
    double best_multiplier = 0.0;
    bool any_valid = false;
    std::vector<double> num(static_cast<std::size_t>(n));
    std::vector<double> den(static_cast<std::size_t>(n));
    for (const double m : grid) {
        std::vector<double> h(base_h);
        for (auto& v : h) v *= m;
        const Eigen::MatrixXd z = scale_columns(lagged.design, h);

        // Leave-one-out sums; the kernel weight is symmetric so each pair is
        // evaluated once.
        std::fill(num.begin(), num.end(), 0.0);
        std::fill(den.begin(), den.end(), 0.0);
        for (long i = 0; i < n; ++i) {
            for (long u = i + 1; u < n; ++u) {
                const double w = std::exp(-0.5 * scaled_dist2(z, u, i));
                num[static_cast<std::size_t>(i)] += w * lagged.targets(u);
                den[static_cast<std::size_t>(i)] += w;
                num[static_cast<std::size_t>(u)] += w * lagged.targets(i);
                den[static_cast<std::size_t>(u)] += w;
            }
        }
        double sum_sq = 0.0;
        bool valid = true;
        for (long i = 0; i < n; ++i) {
            const double d = den[static_cast<std::size_t>(i)];
            if (d <= 0.0 || !std::isfinite(d)) {
                valid = false;  // every remaining weight underflowed
                break;
            }
            const double err = lagged.targets(i) - num[static_cast<std::size_t>(i)] / d;
            sum_sq += err * err;
        }
        if (!valid) continue;
        any_valid = true;
        const double cv = sum_sq / static_cast<double>(n);
        if (cv < best_cv) {  // strict: ties resolve to the smallest h
            best_cv = cv;
            best_multiplier = m;
        }
    }
    if (!any_valid) {
        throw std::runtime_error(
            "cv_bandwidth: no candidate bandwidth yields defined predictions");
    }

    BandwidthSelection out;
    out.per_dimension_h = base_h;
    for (auto& v : out.per_dimension_h) v *= best_multiplier;
    out.rule = BandwidthRule::CrossValidation;
    out.cv_objective_value = best_cv;
    return out;
}

RegressionFit nw_fit(const TimeSeries& y, int lags, const BandwidthSelection& bw) {
    auto lagged = lag_matrix(y, lags);
    const long n = lagged.design.rows();
    if (static_cast<long>(bw.per_dimension_h.size()) != lagged.design.cols()) {
        throw std::invalid_argument("nw_fit: bandwidth dimension mismatch");
    }
    for (double h : bw.per_dimension_h) {
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw std::invalid_argument("nw_fit: bandwidths must be positive");
        }
    }
    const Eigen::MatrixXd z = scale_columns(lagged.design, bw.per_dimension_h);

    RegressionFit fit;
    fit.model = MeanModelSpec::nadaraya_watson(
        lags, bw.rule);
    fit.fitted.resize(static_cast<std::size_t>(n));
    fit.residuals.resize(static_cast<std::size_t>(n));
    fit.effective_start = static_cast<std::size_t>(lags);
    fit.n_params = 0;

    // Own observation contributes weight exp(0) = 1; off-diagonal weights are
    // symmetric and accumulated pairwise.
    std::vector<double> num(static_cast<std::size_t>(n));
    std::vector<double> den(static_cast<std::size_t>(n), 1.0);
    for (long t = 0; t < n; ++t) {
        num[static_cast<std::size_t>(t)] = lagged.targets(t);
    }
    for (long t = 0; t < n; ++t) {
        for (long u = t + 1; u < n; ++u) {
            const double w = std::exp(-0.5 * scaled_dist2(z, u, t));
            num[static_cast<std::size_t>(t)] += w * lagged.targets(u);
            den[static_cast<std::size_t>(t)] += w;
            num[static_cast<std::size_t>(u)] += w * lagged.targets(t);
            den[static_cast<std::size_t>(u)] += w;
        }
    }
    for (long t = 0; t < n; ++t) {
        const double d = den[static_cast<std::size_t>(t)];
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw std::runtime_error("nw_fit: kernel denominator underflow at t = " +
                                     std::to_string(t + lags));
        }
        const double zhat = num[static_cast<std::size_t>(t)] / d;
        fit.fitted[static_cast<std::size_t>(t)] = zhat;
        fit.residuals[static_cast<std::size_t>(t)] = lagged.targets(t) - zhat;
    }
    return fit;
}

}  // namespace archtest
