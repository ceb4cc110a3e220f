#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "archtest/experiment.hpp"
#include "archtest/time_series.hpp"

namespace archtest {

/// Full-precision decimal rendering (round-trips to the same double).
std::string format_full(double v);

/// "dgp,T,<model>..." header plus one row per (dgp, sample size), full
/// precision.
void write_rejection_csv(const RejectionTable& table, std::ostream& os);

/// Aligned text rendering in the layout of the study's tables.
std::string render_rejection_text(const RejectionTable& table, const std::string& title);

/// Critical values in the same row/column layout as the rejection tables.
void write_critical_values_csv(const RejectionTable& layout,
                               const CriticalValueTable& table, std::ostream& os);

/// Rows "t,value" with t = 1..T; no header.
void write_series_csv(const TimeSeries& series, std::ostream& os);

/**
 * Series from a CSV file with either one numeric column or (label, value)
 * rows, in which case the last column is read. A single leading non-numeric
 * header line is skipped. Throws std::runtime_error on unreadable files or
 * non-numeric entries.
 */
TimeSeries read_series_csv(const std::string& path);

/// Parse a model name such as "ar(2)", "t3(2)", "np-pl(1)" or "NP_cv(2)".
MeanModelSpec parse_model_name(const std::string& text);

/// Experiment definition loaded from a JSON config file.
struct ExperimentFile {
    std::string name;            // base name of every output file
    std::string kind;            // "size" or "power"
    double gamma1 = 0.0;         // ARCH coefficient for power runs
    bool size_corrected = false; // additionally emit the size-corrected table
    ExperimentConfig config;
};

/**
 * Load a run definition. Schema (schema_version 1):
 *   name, kind ("size"|"power"), replications, sample_sizes, level,
 *   base_seed, arch_lag, models, dgps, gamma1 (power), size_corrected (power).
 * Unknown DGP or model names and malformed fields raise std::runtime_error.
 */
ExperimentFile load_experiment_file(const std::string& path);

/// Manifest describing one experiment run: config echo, seed, per-cell
/// Monte Carlo standard errors and timings, output paths.
nlohmann::json make_run_manifest(const ExperimentFile& def,
                                 const std::vector<const RejectionTable*>& tables,
                                 const std::vector<std::string>& output_paths,
                                 double total_seconds);

}  // namespace archtest
