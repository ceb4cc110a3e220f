#pragma once

#include <Eigen/Dense>

namespace archtest {

struct OlsSolution {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
    /// Centered R^2 (1 - SSR/SST about the mean); 0 when the dependent
    /// variable is constant. Clamped to [0, 1].
    double r_squared = 0.0;
    bool rank_deficient = false;
};

/**
 * Least squares via a complete orthogonal decomposition. Rank-deficient
 * designs yield the minimum-norm solution with rank_deficient set instead of
 * failing. Requires rows > cols and matching dimensions.
 */
OlsSolution ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& y);

}  // namespace archtest
