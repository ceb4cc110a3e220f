#include "archtest/mean_models.hpp"

#include <cstdio>
#include <stdexcept>

#include "archtest/nadaraya_watson.hpp"

namespace archtest {

MeanModelSpec MeanModelSpec::ar(int lags) {
    if (lags < 1) {
        throw std::invalid_argument("MeanModelSpec: AR lag length must be >= 1");
    }
    return MeanModelSpec{ArModelSpec{lags}};
}

MeanModelSpec MeanModelSpec::taylor(int lags, int order) {
    if (lags < 1) {
        throw std::invalid_argument("MeanModelSpec: polynomial lag length must be >= 1");
    }
    if (order < 2) {
        throw std::invalid_argument("MeanModelSpec: polynomial order must be >= 2");
    }
    return MeanModelSpec{TaylorModelSpec{lags, order}};
}

MeanModelSpec MeanModelSpec::nadaraya_watson(int lags, BandwidthRule rule) {
    if (lags < 1) {
        throw std::invalid_argument("MeanModelSpec: kernel lag length must be >= 1");
    }
    return MeanModelSpec{NwModelSpec{lags, rule}};
}

int MeanModelSpec::lags() const {
    return std::visit([](const auto& m) { return m.lags; }, model);
}

std::string MeanModelSpec::label() const {
    char buf[32];
    if (const auto* ar = std::get_if<ArModelSpec>(&model)) {
        std::snprintf(buf, sizeof(buf), "AR(%d)", ar->lags);
    } else if (const auto* ty = std::get_if<TaylorModelSpec>(&model)) {
        std::snprintf(buf, sizeof(buf), "T%d(%d)", ty->order, ty->lags);
    } else {
        const auto& nw = std::get<NwModelSpec>(model);
        std::snprintf(buf, sizeof(buf), "NP_%s(%d)",
                      nw.bandwidth == BandwidthRule::PlugIn ? "pl" : "cv", nw.lags);
    }
    return buf;
}

LagDesign lag_matrix(const TimeSeries& y, int lags) {
    const auto T = static_cast<long>(y.size());
    if (lags < 1) {
        throw std::invalid_argument("lag_matrix: lag length must be >= 1");
    }
    if (T <= lags) {
        throw std::invalid_argument("lag_matrix: series shorter than lags + 1");
    }
    const long n = T - lags;
    LagDesign out;
    out.design.resize(n, lags);
    out.targets.resize(n);
    for (long t = 0; t < n; ++t) {
        for (int j = 1; j <= lags; ++j) {
            out.design(t, j - 1) = y[static_cast<std::size_t>(t + lags - j)];
        }
        out.targets(t) = y[static_cast<std::size_t>(t + lags)];
    }
    return out;
}

namespace {

RegressionFit fit_from_ols(const MeanModelSpec& spec, const OlsSolution& sol, int lags,
                           int n_params) {
    RegressionFit fit;
    fit.model = spec;
    fit.fitted.assign(sol.fitted.data(), sol.fitted.data() + sol.fitted.size());
    fit.residuals.assign(sol.residuals.data(), sol.residuals.data() + sol.residuals.size());
    fit.effective_start = static_cast<std::size_t>(lags);
    fit.n_params = n_params;
    fit.rank_deficient = sol.rank_deficient;
    return fit;
}

}  // namespace

RegressionFit fit_ar(const TimeSeries& y, int lags) {
    auto lagged = lag_matrix(y, lags);
    const long n = lagged.design.rows();
    Eigen::MatrixXd design(n, lags + 1);
    design.col(0).setOnes();
    design.rightCols(lags) = lagged.design;
    if (n <= design.cols()) {
        throw std::invalid_argument("fit_ar: insufficient data for lag length");
    }
    const auto sol = ols(design, lagged.targets);
    return fit_from_ols(MeanModelSpec::ar(lags), sol, lags, lags + 1);
}

long taylor_column_count(int q, int k) {
    // C(q+k, k), the number of monomials of degree <= k in q variables.
    long count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * (q + i) / i;
    }
    return count;
}

Eigen::MatrixXd taylor_design(const TimeSeries& y, int q, int k) {
    if (q < 1 || k < 1) {
        throw std::invalid_argument("taylor_design: q and k must be >= 1");
    }
    auto lagged = lag_matrix(y, q);
    const long n = lagged.design.rows();
    const long cols = taylor_column_count(q, k);
    if (cols >= n) {
        throw std::invalid_argument("taylor_design: more columns than usable observations");
    }

    Eigen::MatrixXd design(n, cols);
    design.col(0).setOnes();
    long col = 1;
    // Degree-r monomials are built by extending each degree-(r-1) monomial
    // with lag indices >= its last one, which enumerates every multiset once.
    std::vector<std::pair<long, int>> frontier;  // (column, last lag index)
    for (int j = 0; j < q; ++j) {
        design.col(col) = lagged.design.col(j);
        frontier.emplace_back(col, j);
        ++col;
    }
    for (int degree = 2; degree <= k; ++degree) {
        std::vector<std::pair<long, int>> next;
        for (const auto& [prev_col, last] : frontier) {
            for (int j = last; j < q; ++j) {
                design.col(col) = design.col(prev_col).cwiseProduct(lagged.design.col(j));
                next.emplace_back(col, j);
                ++col;
            }
        }
        frontier = std::move(next);
    }
    return design;
}

RegressionFit fit_taylor(const TimeSeries& y, int q, int k) {
    const auto design = taylor_design(y, q, k);
    auto lagged = lag_matrix(y, q);
    const auto sol = ols(design, lagged.targets);
    return fit_from_ols(MeanModelSpec::taylor(q, k), sol, q,
                        static_cast<int>(design.cols()));
}

RegressionFit fit_mean_model(const TimeSeries& y, const MeanModelSpec& spec) {
    if (const auto* ar = std::get_if<ArModelSpec>(&spec.model)) {
        return fit_ar(y, ar->lags);
    }
    if (const auto* ty = std::get_if<TaylorModelSpec>(&spec.model)) {
        return fit_taylor(y, ty->lags, ty->order);
    }
    const auto& nw = std::get<NwModelSpec>(spec.model);
    const auto bw = nw.bandwidth == BandwidthRule::PlugIn
                        ? plugin_bandwidth(lag_matrix(y, nw.lags).design)
                        : cv_bandwidth(y, nw.lags);
    return nw_fit(y, nw.lags, bw);
}

}  // namespace archtest
