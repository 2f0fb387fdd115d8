#pragma once

// Comparative study runner.
//
// For every seed the data is (re)generated or re-split, each training method
// is fit on the identical training partition, and every model is scored on
// the untouched test partition. Per-method results are aggregated across
// seeds as mean +- 95% t-interval. All randomness derives from the seed list,
// so a config fully determines every output byte.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "costsense/config.hpp"
#include "costsense/csv.hpp"
#include "costsense/dataset.hpp"
#include "costsense/learners.hpp"
#include "costsense/metrics.hpp"
#include "costsense/sampling.hpp"
#include "costsense/splitting.hpp"
#include "costsense/synthetic.hpp"

namespace costsense {

struct Method {
  enum class Kind { kStandard, kWeighted, kSampled, kRegression };
  Kind kind = Kind::kStandard;
  SamplingStrategy sampling;  // only for kSampled

  // standard | weighted | regression | p_up | tdown<k>
  static Method parse(std::string_view name);
  [[nodiscard]] std::string name() const;
};

struct DataSource {
  enum class Kind { kSynthetic, kCsv };
  Kind kind = Kind::kSynthetic;
  std::filesystem::path path;
  CsvSchema schema = CsvSchema::kPrecomputedDelta;
  SchemaParams params;
  SyntheticConfig synthetic;  // seed is replaced by each experiment seed
};

enum class ReportFormat { kCsv, kText, kJson };
std::string_view to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view name);

struct ExperimentConfig {
  DataSource data;
  SplitSpec split;  // seed is replaced by each experiment seed
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds;
  TrainConfig train;
  bool standardize = false;
  std::vector<std::size_t> scaling_sizes;
  std::size_t histogram_bins = 20;
  std::vector<ReportFormat> formats{ReportFormat::kCsv, ReportFormat::kText, ReportFormat::kJson};
  std::size_t threads = 1;

  static constexpr std::uint64_t kDefaultBaseSeed = 0;
  static constexpr std::size_t kDefaultSeedCount = 10;

  // Defaults: synthetic data, {standard, weighted}, seeds 0..9.
  static ExperimentConfig defaults();
  // Unknown keys are rejected. `manifest.*` keys are informational and skipped.
  static ExperimentConfig from_document(const KeyValueDocument& doc);
  // Every resolved field, including defaults; reloadable via from_document.
  [[nodiscard]] KeyValueDocument to_document() const;

  void validate() const;
};

struct RunRecord {
  std::string method;
  std::uint64_t seed = 0;
  std::size_t n_train = 0;  // after subsampling, before method-specific sampling
  MetricReport report;
  std::shared_ptr<const ExperimentConfig> config;
};

struct MethodAggregate {
  std::string method;
  std::size_t n_train = 0;  // scaling cell size; 0 for full-split runs
  AggregateReport aggregate;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<MethodAggregate> aggregates;  // config method order
  std::vector<MethodAggregate> scaling;     // (size, method) order; empty unless requested
  std::vector<HistogramBin> histogram;
  std::shared_ptr<const ExperimentConfig> config;
};

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fits `method` on `train` and scores it on `test`. `seed` drives any
/// resampling. Failures are rethrown as HarnessError naming method and seed.
RunRecord run_method(const Method& method, const Dataset& train, const Dataset& test,
                     const TrainConfig& train_cfg, std::uint64_t seed);

/// Full-split runs for every (seed, method), plus the delta histogram.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Learning curves: for each scaling size and seed, a sign-stratified
/// subsample of the training split is fit by every method and scored on the
/// seed's fixed test split. Histogram is filled as in run_experiment.
ExperimentResult run_scaling(const ExperimentConfig& cfg);

/// The data the experiment would see for `seed` (generated or loaded).
Dataset experiment_dataset(const ExperimentConfig& cfg, std::uint64_t seed);

// Table cell in percent with one decimal, e.g. "1.8±0.0".
std::string format_percent_cell(const Interval& interval);

std::string runs_csv(const ExperimentResult& result);
std::string aggregate_csv(const std::vector<MethodAggregate>& rows);
std::string aggregate_text(const std::vector<MethodAggregate>& rows);
std::string aggregate_json(const std::vector<MethodAggregate>& rows);
std::string histogram_csv(const std::vector<HistogramBin>& bins);
std::string scaling_csv(const std::vector<MethodAggregate>& rows);
std::string manifest(const ExperimentConfig& cfg);

/// Writes runs.csv, aggregate.{csv,txt,json} per cfg.formats, histogram.csv,
/// scaling.csv when present, and manifest.cfg. Returns the written paths.
/// Throws HarnessError for an empty result or on I/O failure.
std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result,
                                                const std::filesystem::path& out_dir);

}  // namespace costsense
