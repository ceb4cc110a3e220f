#include "archtest/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "archtest/stats.hpp"

namespace archtest {

namespace {

constexpr double kMaxCellErrorRate = 0.01;

void validate_config(const ExperimentConfig& config) {
    if (config.replications < 100) {
        throw std::invalid_argument("ExperimentConfig: replications must be >= 100");
    }
    if (config.level <= 0.0 || config.level >= 1.0) {
        throw std::invalid_argument("ExperimentConfig: level must lie in (0, 1)");
    }
    if (config.models.empty() || config.dgps.empty() || config.sample_sizes.empty()) {
        throw std::invalid_argument("ExperimentConfig: models, dgps and sample sizes "
                                    "must all be non-empty");
    }
    if (config.arch_lag < 1) {
        throw std::invalid_argument("ExperimentConfig: arch_lag must be >= 1");
    }
}

// All models of one (dgp, T) pair share each replication's simulated series.
struct Group {
    std::size_t dgp_index;
    int sample_size;
};

}  // namespace

std::map<CellKey, CellStatistics> run_lm_statistics(const ExperimentConfig& config) {
    validate_config(config);

    std::vector<Group> groups;
    for (std::size_t d = 0; d < config.dgps.size(); ++d) {
        for (int T : config.sample_sizes) {
            groups.push_back(Group{d, T});
        }
    }
    const std::size_t n_models = config.models.size();
    const auto reps = static_cast<std::size_t>(config.replications);

    // One slot per (group, model, replication); workers write disjoint slots,
    // so the reduction below is independent of scheduling.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<std::vector<double>>> lm(groups.size());
    for (auto& per_model : lm) {
        per_model.assign(n_models, std::vector<double>(reps, nan));
    }
    std::vector<std::vector<double>> cell_seconds(groups.size(),
                                                  std::vector<double>(n_models, 0.0));
    std::mutex seconds_mutex;

    // Pre-compute seed tags "dgp:T" once.
    std::vector<std::string> group_tags(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        group_tags[g] = config.dgps[groups[g].dgp_index].name + ":" +
                        std::to_string(groups[g].sample_size);
    }

    const std::size_t n_tasks = groups.size() * reps;
    std::atomic<std::size_t> next_task{0};

    auto worker = [&]() {
        std::vector<double> local_seconds(n_models);
        for (;;) {
            const std::size_t task = next_task.fetch_add(1, std::memory_order_relaxed);
            if (task >= n_tasks) break;
            const std::size_t g = task / reps;
            const std::size_t r = task % reps;
            const Group& group = groups[g];
            const DgpSpec& dgp = config.dgps[group.dgp_index];

            RngStream rng(config.base_seed, stream_id_for(group_tags[g], r));
            TimeSeries series;
            bool sim_ok = true;
            try {
                series = simulate(dgp, group.sample_size, rng);
            } catch (const std::exception&) {
                sim_ok = false;  // counted against every model of the group
            }

            std::fill(local_seconds.begin(), local_seconds.end(), 0.0);
            for (std::size_t m = 0; m < n_models; ++m) {
                if (!sim_ok) continue;
                const auto start = std::chrono::steady_clock::now();
                try {
                    const auto result = arch_test_pipeline(series, config.models[m],
                                                           config.arch_lag, config.level);
                    lm[g][m][r] = result.lm_stat;
                } catch (const std::exception&) {
                    // stays NaN; counted as a failed replication
                }
                local_seconds[m] +=
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
            }
            {
                std::lock_guard<std::mutex> lock(seconds_mutex);
                for (std::size_t m = 0; m < n_models; ++m) {
                    cell_seconds[g][m] += local_seconds[m];
                }
            }
        }
    };

    std::size_t n_workers = config.workers > 0
                                ? static_cast<std::size_t>(config.workers)
                                : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min(n_workers, n_tasks);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::map<CellKey, CellStatistics> out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t m = 0; m < n_models; ++m) {
            CellKey key{config.dgps[groups[g].dgp_index].name,
                        config.models[m].label(), groups[g].sample_size};
            CellStatistics cell;
            cell.lm_stats = std::move(lm[g][m]);
            cell.errors = static_cast<int>(
                std::count_if(cell.lm_stats.begin(), cell.lm_stats.end(),
                              [](double v) { return std::isnan(v); }));
            cell.seconds = cell_seconds[g][m];
            if (cell.errors > kMaxCellErrorRate * static_cast<double>(reps)) {
                throw CellFailureError("cell " + key.dgp + "/" + key.model + "/T=" +
                                       std::to_string(key.sample_size) + ": " +
                                       std::to_string(cell.errors) + " of " +
                                       std::to_string(reps) + " replications failed");
            }
            out.emplace(std::move(key), std::move(cell));
        }
    }
    return out;
}

namespace {

RejectionTable table_skeleton(const ExperimentConfig& config) {
    RejectionTable table;
    for (const auto& dgp : config.dgps) table.dgp_names.push_back(dgp.name);
    table.sample_sizes = config.sample_sizes;
    for (const auto& model : config.models) table.model_labels.push_back(model.label());
    table.replications = config.replications;
    table.level = config.level;
    return table;
}

template <typename RejectPredicate>
RejectionTable reduce_table(const ExperimentConfig& config,
                            const std::map<CellKey, CellStatistics>& stats,
                            RejectPredicate rejects) {
    RejectionTable table = table_skeleton(config);
    for (const auto& [key, cell] : stats) {
        long rejected = 0;
        long completed = 0;
        for (double lm : cell.lm_stats) {
            if (std::isnan(lm)) continue;
            ++completed;
            if (rejects(key, lm)) ++rejected;
        }
        const double f = completed > 0
                             ? static_cast<double>(rejected) / static_cast<double>(completed)
                             : 0.0;
        table.frequency[key] = f;
        table.monte_carlo_se[key] =
            completed > 0 ? std::sqrt(f * (1.0 - f) / static_cast<double>(completed)) : 0.0;
        table.errors[key] = cell.errors;
        table.seconds[key] = cell.seconds;
    }
    return table;
}

}  // namespace

RejectionTable reduce_rejection_table(const ExperimentConfig& config,
                                      const std::map<CellKey, CellStatistics>& stats) {
    const int p = config.arch_lag;
    const double level = config.level;
    return reduce_table(config, stats, [p, level](const CellKey&, double lm) {
        return chi2_survival(lm, p) < level;
    });
}

CriticalValueTable reduce_critical_values(const ExperimentConfig& config,
                                          const std::map<CellKey, CellStatistics>& stats) {
    CriticalValueTable table;
    table.level = config.level;
    table.replications = config.replications;
    for (const auto& [key, cell] : stats) {
        std::vector<double> completed;
        completed.reserve(cell.lm_stats.size());
        for (double lm : cell.lm_stats) {
            if (!std::isnan(lm)) completed.push_back(lm);
        }
        if (completed.empty()) {
            throw CellFailureError("empirical critical value undefined: no completed "
                                   "replications in cell " + key.dgp + "/" + key.model);
        }
        table.critical_value[key] = quantile(std::move(completed), 1.0 - config.level);
    }
    return table;
}

RejectionTable reduce_exceedance_table(const ExperimentConfig& config,
                                       const std::map<CellKey, CellStatistics>& stats,
                                       const CriticalValueTable& critical_values) {
    return reduce_table(config, stats,
                        [&critical_values](const CellKey& key, double lm) {
                            const auto it = critical_values.critical_value.find(key);
                            if (it == critical_values.critical_value.end()) {
                                throw std::invalid_argument(
                                    "size-corrected power: missing critical value for cell " +
                                    key.dgp + "/" + key.model + "/T=" +
                                    std::to_string(key.sample_size));
                            }
                            return lm > it->second;
                        });
}

namespace {

void require_null_config(const ExperimentConfig& config, const char* what) {
    for (const auto& dgp : config.dgps) {
        if (dgp.error.gamma1 != 0.0) {
            throw std::invalid_argument(std::string(what) +
                                        ": DGPs must carry homoskedastic errors "
                                        "(gamma1 = 0); offending process " + dgp.name);
        }
    }
}

ExperimentConfig with_arch_errors(ExperimentConfig config, double gamma1) {
    for (auto& dgp : config.dgps) {
        dgp.error = ArchErrorSpec{1.0, gamma1};
    }
    return config;
}

}  // namespace

RejectionTable run_size(const ExperimentConfig& config) {
    require_null_config(config, "run_size");
    return reduce_rejection_table(config, run_lm_statistics(config));
}

RejectionTable run_power(const ExperimentConfig& config, double gamma1) {
    if (gamma1 < 0.0) {
        throw std::invalid_argument("run_power: gamma1 must be non-negative");
    }
    const auto powered = with_arch_errors(config, gamma1);
    return reduce_rejection_table(powered, run_lm_statistics(powered));
}

CriticalValueTable empirical_critical_values(const ExperimentConfig& config) {
    require_null_config(config, "empirical_critical_values");
    return reduce_critical_values(config, run_lm_statistics(config));
}

RejectionTable run_size_corrected_power(const ExperimentConfig& config, double gamma1,
                                        const CriticalValueTable& critical_values) {
    if (gamma1 < 0.0) {
        throw std::invalid_argument("run_size_corrected_power: gamma1 must be non-negative");
    }
    const auto powered = with_arch_errors(config, gamma1);
    return reduce_exceedance_table(powered, run_lm_statistics(powered), critical_values);
}

}  // namespace archtest
