#include "archtest/arch_test.hpp"

#include <stdexcept>

#include "archtest/stats.hpp"

namespace archtest {

ArchTestResult lm_arch_test(const std::vector<double>& residuals, int p, double level) {
    if (p < 1) {
        throw std::invalid_argument("lm_arch_test: lag order must be >= 1");
    }
    if (level <= 0.0 || level >= 1.0) {
        throw std::invalid_argument("lm_arch_test: level must lie in (0, 1)");
    }
    const auto len = static_cast<long>(residuals.size());
    if (len <= p + 2) {
        throw std::invalid_argument("lm_arch_test: residual series too short for lag order");
    }

    TimeSeries squared(residuals.size());
    for (std::size_t t = 0; t < residuals.size(); ++t) {
        squared[t] = residuals[t] * residuals[t];
    }

    // First p squared residuals serve only as lags; no presample padding.
    auto lagged = lag_matrix(squared, p);
    const long n = lagged.design.rows();

    const double mean_sq = lagged.targets.mean();
    if ((lagged.targets.array() - mean_sq).abs().maxCoeff() == 0.0) {
        throw DegenerateResidualsError(
            "lm_arch_test: squared residuals have zero variance");
    }

    Eigen::MatrixXd design(n, p + 1);
    design.col(0).setOnes();
    design.rightCols(p) = lagged.design;
    const auto sol = ols(design, lagged.targets);

    ArchTestResult out;
    out.n_used = static_cast<std::size_t>(n);
    out.df = p;
    out.lm_stat = static_cast<double>(n) * sol.r_squared;
    out.p_value = chi2_survival(out.lm_stat, p);
    out.level = level;
    out.reject = out.p_value < level;
    return out;
}

ArchTestResult arch_test_pipeline(const TimeSeries& y, const MeanModelSpec& model,
                                  int p, double level) {
    const auto fit = fit_mean_model(y, model);
    return lm_arch_test(fit.residuals, p, level);
}

}  // namespace archtest
