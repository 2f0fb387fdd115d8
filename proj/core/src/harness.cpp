#include "costsense/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "costsense/random.hpp"
#include "costsense/text.hpp"

namespace costsense {

namespace {

constexpr std::string_view kManifestVersion = "1";

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += ',';
    out += parts[k];
  }
  return out;
}

std::vector<std::string_view> list_of(std::string_view value) {
  std::vector<std::string_view> out;
  if (text::trim(value).empty()) return out;
  for (const auto item : text::split(value, ',')) {
    const auto t = text::trim(item);
    if (t.empty()) throw std::invalid_argument("empty item in list '" + std::string(value) + "'");
    out.push_back(t);
  }
  return out;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? text::format_double(*v) : std::string();
}

// Everything one (seed, size) cell needs: identical for every method.
struct Partition {
  Dataset train;
  Dataset test;
};

Partition prepare(const Dataset& train, const Dataset& test, bool standardize) {
  if (!standardize) return {train, test};
  const auto s = Standardizer::fit(train);
  return {s.apply(train), s.apply(test)};
}

struct SeedOutcome {
  std::vector<RunRecord> full;
  std::vector<RunRecord> scaling;
};

SeedOutcome run_seed(const ExperimentConfig& cfg, const std::shared_ptr<const ExperimentConfig>& snapshot,
                     const Dataset* loaded, std::uint64_t seed, bool scaling) {
  const Dataset data = loaded ? *loaded : experiment_dataset(cfg, seed);
  SplitSpec spec = cfg.split;
  spec.seed = seed;
  DatasetSplit parts;
  try {
    parts = split(data, spec);
  } catch (const std::exception& e) {
    throw HarnessError("seed " + std::to_string(seed) + ": " + e.what());
  }

  SeedOutcome out;
  auto run_all = [&](const Dataset& train, std::vector<RunRecord>& sink) {
    const auto cell = prepare(train, parts.test, cfg.standardize);
    for (const auto& method : cfg.methods) {
      auto record = run_method(method, cell.train, cell.test, cfg.train, seed);
      record.config = snapshot;
      sink.push_back(std::move(record));
    }
  };

  if (!scaling) {
    run_all(parts.train, out.full);
    return out;
  }
  for (const std::size_t n : cfg.scaling_sizes) {
    Dataset sub;
    try {
      sub = subsample_train(parts.train, n, mix_seed(seed, n));
    } catch (const std::exception& e) {
      throw HarnessError("seed " + std::to_string(seed) + ", N=" + std::to_string(n) + ": " +
                         e.what());
    }
    run_all(sub, out.scaling);
  }
  return out;
}

std::vector<SeedOutcome> run_seeds(const ExperimentConfig& cfg,
                                   const std::shared_ptr<const ExperimentConfig>& snapshot,
                                   const Dataset* loaded, bool scaling) {
  std::vector<SeedOutcome> outcomes(cfg.seeds.size());
  std::vector<std::exception_ptr> errors(cfg.seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cfg.seeds.size(); k = next++) {
      try {
        outcomes[k] = run_seed(cfg, snapshot, loaded, cfg.seeds[k], scaling);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(cfg.threads, 1, cfg.seeds.size());
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);  // first failing seed in seed order
  }
  return outcomes;
}

std::vector<MethodAggregate> aggregate_by(const std::vector<RunRecord>& records,
                                          const std::vector<Method>& methods,
                                          const std::vector<std::size_t>& sizes) {
  std::vector<MethodAggregate> out;
  for (const std::size_t n : sizes) {
    for (const auto& method : methods) {
      const auto name = method.name();
      std::vector<MetricReport> reports;
      for (const auto& r : records) {
        if (r.method == name && (n == 0 || r.n_train == n)) reports.push_back(r.report);
      }
      out.push_back({name, n, aggregate(reports)});
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw HarnessError("cannot write '" + path.string() + "'");
  out << contents;
  out.close();
  if (!out) throw HarnessError("write failed for '" + path.string() + "'");
}

std::string pad(const std::string& s, std::size_t width) {
  // Display width: count UTF-8 code points.
  std::size_t cps = 0;
  for (const unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

}  // namespace

Method Method::parse(std::string_view name) {
  if (name == "standard") return {Kind::kStandard, {}};
  if (name == "weighted") return {Kind::kWeighted, {}};
  if (name == "regression") return {Kind::kRegression, {}};
  if (name == "p_up" || name.starts_with("tdown")) {
    return {Kind::kSampled, SamplingStrategy::parse(name)};
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string Method::name() const {
  switch (kind) {
    case Kind::kStandard:
      return "standard";
    case Kind::kWeighted:
      return "weighted";
    case Kind::kRegression:
      return "regression";
    case Kind::kSampled:
      return sampling.name();
  }
  return "unknown";
}

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kText:
      return "text";
    case ReportFormat::kJson:
      return "json";
  }
  return "unknown";
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig cfg;
  cfg.methods = {Method::parse("standard"), Method::parse("weighted")};
  for (std::size_t k = 0; k < kDefaultSeedCount; ++k) cfg.seeds.push_back(kDefaultBaseSeed + k);
  return cfg;
}

ExperimentConfig ExperimentConfig::from_document(const KeyValueDocument& doc) {
  ExperimentConfig cfg = defaults();
  std::optional<std::uint64_t> base_seed;
  std::optional<std::size_t> num_seeds;
  bool explicit_seeds = false;

  for (const auto& [key, value] : doc.entries()) {
    try {
      if (key.starts_with("manifest.")) {
        continue;
      } else if (key == "data.source") {
        if (value == "synthetic") {
          cfg.data.kind = DataSource::Kind::kSynthetic;
        } else if (value == "csv") {
          cfg.data.kind = DataSource::Kind::kCsv;
        } else {
          throw std::invalid_argument("expected 'synthetic' or 'csv'");
        }
      } else if (key == "data.path") {
        cfg.data.path = value;
      } else if (key == "data.schema") {
        cfg.data.schema = parse_csv_schema(value);
      } else if (key == "data.tau") {
        cfg.data.params.tau = text::parse_double(value);
      } else if (key == "data.rating_min") {
        cfg.data.params.rating_scale.min = text::parse_double(value);
      } else if (key == "data.rating_max") {
        cfg.data.params.rating_scale.max = text::parse_double(value);
      } else if (key == "data.midpoint") {
        cfg.data.params.rating_scale.midpoint = text::parse_double(value);
      } else if (key == "data.orientation") {
        cfg.data.params.orientation = parse_rating_orientation(value);
      } else if (key == "synthetic.n") {
        cfg.data.synthetic.n = text::parse_uint(value);
      } else if (key == "synthetic.dim") {
        cfg.data.synthetic.dim = text::parse_uint(value);
      } else if (key == "synthetic.weight_norm") {
        cfg.data.synthetic.weight_norm = text::parse_double(value);
      } else if (key == "synthetic.noise_sigma") {
        cfg.data.synthetic.noise_sigma = text::parse_double(value);
      } else if (key == "split.train") {
        cfg.split.train = text::parse_double(value);
      } else if (key == "split.validation") {
        cfg.split.validation = text::parse_double(value);
      } else if (key == "split.test") {
        cfg.split.test = text::parse_double(value);
      } else if (key == "split.stratify") {
        cfg.split.stratify_on_sign = text::parse_bool(value);
      } else if (key == "experiment.methods") {
        cfg.methods.clear();
        for (const auto m : list_of(value)) cfg.methods.push_back(Method::parse(m));
      } else if (key == "experiment.seeds") {
        explicit_seeds = true;
        cfg.seeds.clear();
        for (const auto s : list_of(value)) cfg.seeds.push_back(text::parse_uint(s));
      } else if (key == "experiment.base_seed") {
        base_seed = text::parse_uint(value);
      } else if (key == "experiment.num_seeds") {
        num_seeds = text::parse_uint(value);
      } else if (key == "experiment.scaling_sizes") {
        cfg.scaling_sizes.clear();
        for (const auto s : list_of(value)) cfg.scaling_sizes.push_back(text::parse_uint(s));
      } else if (key == "experiment.threads") {
        cfg.threads = text::parse_uint(value);
      } else if (key == "train.l2_lambda") {
        cfg.train.l2_lambda = text::parse_double(value);
      } else if (key == "train.learning_rate") {
        cfg.train.learning_rate = text::parse_double(value);
      } else if (key == "train.max_iters") {
        cfg.train.max_iters = text::parse_uint(value);
      } else if (key == "train.grad_tol") {
        cfg.train.grad_tol = text::parse_double(value);
      } else if (key == "train.weight_normalization") {
        cfg.train.weight_normalization = text::parse_bool(value);
      } else if (key == "train.standardize") {
        cfg.standardize = text::parse_bool(value);
      } else if (key == "report.histogram_bins") {
        cfg.histogram_bins = text::parse_uint(value);
      } else if (key == "report.formats") {
        cfg.formats.clear();
        for (const auto f : list_of(value)) cfg.formats.push_back(parse_report_format(f));
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
  }

  if (explicit_seeds && (base_seed || num_seeds)) {
    throw std::invalid_argument(
        "config: experiment.seeds cannot be combined with base_seed/num_seeds");
  }
  if (!explicit_seeds && (base_seed || num_seeds)) {
    cfg.seeds.clear();
    const auto base = base_seed.value_or(kDefaultBaseSeed);
    for (std::size_t k = 0; k < num_seeds.value_or(kDefaultSeedCount); ++k) {
      cfg.seeds.push_back(base + k);
    }
  }
  cfg.validate();
  return cfg;
}

KeyValueDocument ExperimentConfig::to_document() const {
  using text::format_double;
  KeyValueDocument doc;
  doc.set("data.source", data.kind == DataSource::Kind::kSynthetic ? "synthetic" : "csv");
  if (data.kind == DataSource::Kind::kCsv) {
    doc.set("data.path", data.path.generic_string());
    doc.set("data.schema", std::string(to_string(data.schema)));
    doc.set("data.tau", format_double(data.params.tau));
    doc.set("data.rating_min", format_double(data.params.rating_scale.min));
    doc.set("data.rating_max", format_double(data.params.rating_scale.max));
    doc.set("data.midpoint", format_double(data.params.rating_scale.midpoint));
    doc.set("data.orientation", std::string(to_string(data.params.orientation)));
  } else {
    doc.set("synthetic.n", std::to_string(data.synthetic.n));
    doc.set("synthetic.dim", std::to_string(data.synthetic.dim));
    doc.set("synthetic.weight_norm", format_double(data.synthetic.weight_norm));
    doc.set("synthetic.noise_sigma", format_double(data.synthetic.noise_sigma));
  }
  doc.set("split.train", format_double(split.train));
  doc.set("split.validation", format_double(split.validation));
  doc.set("split.test", format_double(split.test));
  doc.set("split.stratify", split.stratify_on_sign ? "true" : "false");

  std::vector<std::string> names;
  for (const auto& m : methods) names.push_back(m.name());
  doc.set("experiment.methods", join(names));
  std::vector<std::string> seed_list;
  for (const auto s : seeds) seed_list.push_back(std::to_string(s));
  doc.set("experiment.seeds", join(seed_list));
  std::vector<std::string> sizes;
  for (const auto n : scaling_sizes) sizes.push_back(std::to_string(n));
  doc.set("experiment.scaling_sizes", join(sizes));
  doc.set("experiment.threads", std::to_string(threads));

  doc.set("train.l2_lambda", format_double(train.l2_lambda));
  doc.set("train.learning_rate", format_double(train.learning_rate));
  doc.set("train.max_iters", std::to_string(train.max_iters));
  doc.set("train.grad_tol", format_double(train.grad_tol));
  doc.set("train.weight_normalization", train.weight_normalization ? "true" : "false");
  doc.set("train.standardize", standardize ? "true" : "false");

  doc.set("report.histogram_bins", std::to_string(histogram_bins));
  std::vector<std::string> fmt;
  for (const auto f : formats) fmt.emplace_back(to_string(f));
  doc.set("report.formats", join(fmt));
  return doc;
}

void ExperimentConfig::validate() const {
  if (methods.empty()) throw std::invalid_argument("config: method list is empty");
  std::set<std::string> seen;
  for (const auto& m : methods) {
    if (!seen.insert(m.name()).second) {
      throw std::invalid_argument("config: method '" + m.name() + "' listed twice");
    }
  }
  if (seeds.size() < 2) {
    throw std::invalid_argument("config: at least 2 seeds are needed for confidence intervals");
  }
  if (std::set(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw std::invalid_argument("config: duplicate seeds");
  }
  if (data.kind == DataSource::Kind::kCsv && data.path.empty()) {
    throw std::invalid_argument("config: data.path is required for csv sources");
  }
  if (data.kind == DataSource::Kind::kSynthetic) data.synthetic.validate();
  split.validate();
  train.validate();
  if (histogram_bins < 1) throw std::invalid_argument("config: histogram_bins must be >= 1");
  if (std::set(scaling_sizes.begin(), scaling_sizes.end()).size() != scaling_sizes.size()) {
    throw std::invalid_argument("config: duplicate scaling sizes");
  }
  for (const auto n : scaling_sizes) {
    if (n == 0) throw std::invalid_argument("config: scaling sizes must be positive");
  }
  if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
}

RunRecord run_method(const Method& method, const Dataset& train, const Dataset& test,
                     const TrainConfig& train_cfg, std::uint64_t seed) {
  RunRecord record;
  record.method = method.name();
  record.seed = seed;
  record.n_train = train.size();
  try {
    if (!test.empty() && !train.empty() && test.dim() != train.dim()) {
      throw std::invalid_argument("train and test feature dimensions differ");
    }
    LinearModel model;
    switch (method.kind) {
      case Method::Kind::kStandard: {
        const std::vector<double> unit(train.size(), 1.0);
        model = fit_logistic(train, unit, train_cfg);
        break;
      }
      case Method::Kind::kWeighted: {
        std::vector<double> costs;
        costs.reserve(train.size());
        for (const auto& ex : train.examples()) costs.push_back(std::abs(ex.delta));
        model = fit_logistic(train, costs, train_cfg);
        break;
      }
      case Method::Kind::kSampled: {
        const Dataset sampled = apply(SamplingPlan{method.sampling, seed}, train);
        const std::vector<double> unit(sampled.size(), 1.0);
        model = fit_logistic(sampled, unit, train_cfg);
        break;
      }
      case Method::Kind::kRegression:
        model = fit_delta_regression(train, train_cfg);
        break;
    }
    record.report = evaluate(test, predict(model, test), model.kind == ModelKind::kLinear);
  } catch (const std::exception& e) {
    throw HarnessError("method '" + record.method + "', seed " + std::to_string(seed) + ": " +
                       e.what());
  }
  return record;
}

Dataset experiment_dataset(const ExperimentConfig& cfg, std::uint64_t seed) {
  if (cfg.data.kind == DataSource::Kind::kCsv) {
    return load_csv(cfg.data.path, cfg.data.schema, cfg.data.params);
  }
  SyntheticConfig syn = cfg.data.synthetic;
  syn.seed = seed;
  return generate(syn).dataset;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.config = std::make_shared<const ExperimentConfig>(cfg);
  std::optional<Dataset> loaded;
  if (cfg.data.kind == DataSource::Kind::kCsv) loaded = experiment_dataset(cfg, 0);

  const Dataset first = loaded ? *loaded : experiment_dataset(cfg, cfg.seeds.front());
  result.histogram = delta_histogram(first, cfg.histogram_bins);

  for (auto& outcome : run_seeds(cfg, result.config, loaded ? &*loaded : nullptr, false)) {
    std::move(outcome.full.begin(), outcome.full.end(), std::back_inserter(result.records));
  }
  result.aggregates = aggregate_by(result.records, cfg.methods, {0});
  return result;
}

ExperimentResult run_scaling(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.scaling_sizes.empty()) throw HarnessError("run_scaling: no scaling sizes configured");
  ExperimentResult result;
  result.config = std::make_shared<const ExperimentConfig>(cfg);
  std::optional<Dataset> loaded;
  if (cfg.data.kind == DataSource::Kind::kCsv) loaded = experiment_dataset(cfg, 0);

  const Dataset first = loaded ? *loaded : experiment_dataset(cfg, cfg.seeds.front());
  result.histogram = delta_histogram(first, cfg.histogram_bins);

  for (auto& outcome : run_seeds(cfg, result.config, loaded ? &*loaded : nullptr, true)) {
    std::move(outcome.scaling.begin(), outcome.scaling.end(),
              std::back_inserter(result.records));
  }
  result.scaling = aggregate_by(result.records, cfg.methods, cfg.scaling_sizes);
  return result;
}

std::string format_percent_cell(const Interval& interval) {
  return text::format_fixed(interval.mean * 100.0, 1) + "±" +
         text::format_fixed(interval.half_width * 100.0, 1);
}

std::string runs_csv(const ExperimentResult& result) {
  std::string out = "method,seed,n_train,n_test,nec,error_rate,ratio,delta_mae\n";
  for (const auto& r : result.records) {
    out += r.method + "," + std::to_string(r.seed) + "," + std::to_string(r.n_train) + "," +
           std::to_string(r.report.n) + "," + text::format_double(r.report.nec) + "," +
           text::format_double(r.report.error_rate) + "," + optional_number(r.report.ratio) +
           "," + optional_number(r.report.delta_mae) + "\n";
  }
  return out;
}

std::string aggregate_csv(const std::vector<MethodAggregate>& rows) {
  std::string out =
      "method,n_seeds,nec_mean,nec_half_width,error_mean,error_half_width,ratio,"
      "delta_mae_mean,delta_mae_half_width\n";
  for (const auto& row : rows) {
    const auto& a = row.aggregate;
    out += row.method + "," + std::to_string(a.n_seeds) + "," +
           text::format_double(a.nec.mean) + "," + text::format_double(a.nec.half_width) + "," +
           text::format_double(a.error_rate.mean) + "," +
           text::format_double(a.error_rate.half_width) + "," + optional_number(a.ratio) + "," +
           (a.delta_mae ? text::format_double(a.delta_mae->mean) : "") + "," +
           (a.delta_mae ? text::format_double(a.delta_mae->half_width) : "") + "\n";
  }
  return out;
}

std::string aggregate_text(const std::vector<MethodAggregate>& rows) {
  const std::vector<std::string> header{"Method", "NEC (%)", "Error (%)", "Error/NEC",
                                        "Delta MAE"};
  std::vector<std::vector<std::string>> table{header};
  for (const auto& row : rows) {
    const auto& a = row.aggregate;
    table.push_back({row.method, format_percent_cell(a.nec), format_percent_cell(a.error_rate),
                     a.ratio ? text::format_fixed(*a.ratio, 2) : "n/a",
                     a.delta_mae ? text::format_fixed(a.delta_mae->mean, 3) + "±" +
                                       text::format_fixed(a.delta_mae->half_width, 3)
                                 : "-"});
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::size_t cps = 0;
      for (const unsigned char ch : line[c]) cps += (ch & 0xC0) != 0x80;
      widths[c] = std::max(widths[c], cps);
    }
  }
  std::string out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      line += c + 1 == table[r].size() ? table[r][c] : pad(table[r][c], widths[c] + 2);
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (const auto w : widths) total += w + 2;
      out += std::string(total - 2, '-') + "\n";
    }
  }
  return out;
}

std::string aggregate_json(const std::vector<MethodAggregate>& rows) {
  auto interval = [](const Interval& i) {
    return nlohmann::ordered_json{{"mean", i.mean}, {"half_width", i.half_width}};
  };
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto& a = row.aggregate;
    nlohmann::ordered_json item{{"method", row.method}};
    if (row.n_train > 0) item["n_train"] = row.n_train;
    item["n_seeds"] = a.n_seeds;
    item["nec"] = interval(a.nec);
    item["error_rate"] = interval(a.error_rate);
    item["ratio"] = a.ratio ? nlohmann::ordered_json(*a.ratio) : nlohmann::ordered_json(nullptr);
    item["delta_mae"] =
        a.delta_mae ? interval(*a.delta_mae) : nlohmann::ordered_json(nullptr);
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::string out = "bin_low,bin_high,count\n";
  for (const auto& b : bins) {
    out += text::format_double(b.low) + "," + text::format_double(b.high) + "," +
           std::to_string(b.count) + "\n";
  }
  return out;
}

std::string scaling_csv(const std::vector<MethodAggregate>& rows) {
  std::string out =
      "n_train,method,n_seeds,nec_mean,nec_half_width,error_mean,error_half_width,ratio\n";
  for (const auto& row : rows) {
    const auto& a = row.aggregate;
    out += std::to_string(row.n_train) + "," + row.method + "," + std::to_string(a.n_seeds) +
           "," + text::format_double(a.nec.mean) + "," + text::format_double(a.nec.half_width) +
           "," + text::format_double(a.error_rate.mean) + "," +
           text::format_double(a.error_rate.half_width) + "," + optional_number(a.ratio) + "\n";
  }
  return out;
}

std::string manifest(const ExperimentConfig& cfg) {
  auto doc = cfg.to_document();
  doc.set("manifest.version", std::string(kManifestVersion));
  doc.set("manifest.generator", std::string(kGeneratorName));
  doc.set("manifest.ci", "student-t 95% two-sided, dof = n_seeds - 1");
  doc.set("manifest.optimizer",
          "full-batch gradient descent, zero init, step = learning_rate / curvature bound, "
          "halving on objective increase");
  return "# costsense run manifest; reload with --config to reproduce\n" + doc.to_string();
}

std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result,
                                                const std::filesystem::path& out_dir) {
  if (result.records.empty() || !result.config) {
    throw HarnessError("emit_reports: nothing to write (no run records)");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw HarnessError("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& contents) {
    const auto path = out_dir / name;
    write_file(path, contents);
    written.push_back(path);
  };

  emit("runs.csv", runs_csv(result));
  if (!result.aggregates.empty()) {
    for (const auto format : result.config->formats) {
      switch (format) {
        case ReportFormat::kCsv:
          emit("aggregate.csv", aggregate_csv(result.aggregates));
          break;
        case ReportFormat::kText:
          emit("aggregate.txt", aggregate_text(result.aggregates));
          break;
        case ReportFormat::kJson:
          emit("aggregate.json", aggregate_json(result.aggregates));
          break;
      }
    }
  }
  if (!result.histogram.empty()) emit("histogram.csv", histogram_csv(result.histogram));
  if (!result.scaling.empty()) emit("scaling.csv", scaling_csv(result.scaling));
  emit("manifest.cfg", manifest(*result.config));
  return written;
}

}  // namespace costsense
