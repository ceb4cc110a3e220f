#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "archtest/arch_test.hpp"
#include "archtest/dgp.hpp"
#include "archtest/mean_models.hpp"

namespace archtest {

/// More than 1% of a cell's replications failed.
class CellFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * One Monte Carlo run: every (dgp, mean model, sample size) combination is a
 * cell. Replication r of a cell draws from the stream derived from the dgp
 * name, the sample size and r, so all mean models of a cell group see the
 * same simulated series and reruns are reproducible for any worker count.
 */
struct ExperimentConfig {
    int replications = 2000;
    std::vector<int> sample_sizes{100, 250, 500};
    double level = 0.05;
    std::uint64_t base_seed = 1;
    std::vector<MeanModelSpec> models;
    std::vector<DgpSpec> dgps;
    int arch_lag = 1;  // lag order p of the LM test
    int workers = 0;   // 0 = hardware concurrency
};

struct CellKey {
    std::string dgp;
    std::string model;
    int sample_size = 0;

    auto operator<=>(const CellKey&) const = default;
};

/// Raw per-cell outcome: one LM statistic per completed replication (NaN for
/// failed ones) plus bookkeeping.
struct CellStatistics {
    std::vector<double> lm_stats;  // indexed by replication
    int errors = 0;
    double seconds = 0.0;  // wall time spent fitting and testing this cell
};

/// Rejection frequencies in the layout of the study's tables: DGPs down,
/// models across, one row block per sample size.
struct RejectionTable {
    std::vector<std::string> dgp_names;      // row group order
    std::vector<int> sample_sizes;           // rows within each group
    std::vector<std::string> model_labels;   // column order
    std::map<CellKey, double> frequency;
    std::map<CellKey, double> monte_carlo_se;
    std::map<CellKey, int> errors;
    std::map<CellKey, double> seconds;
    int replications = 0;
    double level = 0.05;
};

/// Empirical null critical values per cell.
struct CriticalValueTable {
    std::map<CellKey, double> critical_value;
    double level = 0.05;
    int replications = 0;
};

/// Simulate and test every cell; the building block the tables reduce from.
std::map<CellKey, CellStatistics> run_lm_statistics(const ExperimentConfig& config);

/// Fraction of replications with p-value below the level, per cell.
RejectionTable reduce_rejection_table(const ExperimentConfig& config,
                                      const std::map<CellKey, CellStatistics>& stats);

/// Empirical (1 - level) quantile of the LM statistics, per cell.
CriticalValueTable reduce_critical_values(const ExperimentConfig& config,
                                          const std::map<CellKey, CellStatistics>& stats);

/// Fraction of replications whose LM statistic exceeds the cell's critical
/// value. Throws if a cell is missing from the table.
RejectionTable reduce_exceedance_table(const ExperimentConfig& config,
                                       const std::map<CellKey, CellStatistics>& stats,
                                       const CriticalValueTable& critical_values);

/// Empirical size: every DGP must carry homoskedastic errors (gamma1 = 0).
RejectionTable run_size(const ExperimentConfig& config);

/// Nominal power: reruns the configuration with ARCH errors gamma0 = 1 and
/// the given gamma1. gamma1 = 0 reduces to run_size with identical seeds.
RejectionTable run_power(const ExperimentConfig& config, double gamma1);

/// Null critical values from the same DGPs with gamma1 = 0.
CriticalValueTable empirical_critical_values(const ExperimentConfig& config);

/// Size-corrected power: rejection against per-cell empirical critical values.
RejectionTable run_size_corrected_power(const ExperimentConfig& config, double gamma1,
                                        const CriticalValueTable& critical_values);

}  // namespace archtest
