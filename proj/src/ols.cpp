#include "archtest/ols.hpp"

#include <algorithm>
#include <stdexcept>

namespace archtest {

OlsSolution ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& y) {
    const auto rows = design.rows();
    const auto cols = design.cols();
    if (rows != y.size()) {
        throw std::invalid_argument("ols: design rows and target length differ");
    }
    if (cols < 1) {
        throw std::invalid_argument("ols: design has no columns");
    }
    if (rows <= cols) {
        throw std::invalid_argument("ols: need more observations than parameters");
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    // Pivot tolerance: eps * max dimension, relative to the largest pivot.
    cod.setThreshold(Eigen::NumTraits<double>::epsilon() *
                     static_cast<double>(std::max(rows, cols)));
    cod.compute(design);

    OlsSolution out;
    out.coefficients = cod.solve(y);
    out.fitted = design * out.coefficients;
    out.residuals = y - out.fitted;
    out.rank_deficient = cod.rank() < cols;

    const double ssr = out.residuals.squaredNorm();
    const double ybar = y.mean();
    const double sst = (y.array() - ybar).matrix().squaredNorm();
    if (sst > 0.0) {
        out.r_squared = std::clamp(1.0 - ssr / sst, 0.0, 1.0);
    }
    return out;
}

}  // namespace archtest
