// costsense: cost-sensitive evaluation and training study from the command line.
//
//   costsense run   --config exp.cfg --out results/
//   costsense scale --config exp.cfg --out results/
//   costsense hist  --data votes.csv --schema votes --bins 20
//   costsense gen   --n 10000 --dim 10 --seed 3 --out data/
//   costsense eval  --data votes.csv --schema votes --predictions preds.csv

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "costsense/config.hpp"
#include "costsense/csv.hpp"
#include "costsense/harness.hpp"
#include "costsense/metrics.hpp"
#include "costsense/random.hpp"
#include "costsense/synthetic.hpp"
#include "costsense/text.hpp"

namespace cs = costsense;

namespace {

struct GlobalOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
};

struct DataOptions {
  std::string path;
  std::string schema;
  std::optional<double> tau;
  std::optional<double> midpoint;
  std::optional<double> rating_min;
  std::optional<double> rating_max;
  std::optional<std::string> orientation;

  void attach(CLI::App* cmd) {
    cmd->add_option("--data", path, "CSV dataset (overrides data.path)");
    cmd->add_option("--schema", schema, "votes | threshold | rating | precomputed_delta")
        ->check(CLI::IsMember({"votes", "threshold", "rating", "precomputed_delta"}));
    cmd->add_option("--tau", tau, "Decision threshold for the threshold schema");
    cmd->add_option("--midpoint", midpoint, "Rating scale midpoint");
    cmd->add_option("--rating-min", rating_min, "Lowest valid rating");
    cmd->add_option("--rating-max", rating_max, "Highest valid rating");
    cmd->add_option("--orientation", orientation,
                    "midpoint_minus_score | score_minus_midpoint");
  }

  void apply(cs::ExperimentConfig& cfg) const {
    if (!path.empty()) {
      cfg.data.kind = cs::DataSource::Kind::kCsv;
      cfg.data.path = path;
    }
    if (!schema.empty()) cfg.data.schema = cs::parse_csv_schema(schema);
    if (tau) cfg.data.params.tau = *tau;
    if (midpoint) cfg.data.params.rating_scale.midpoint = *midpoint;
    if (rating_min) cfg.data.params.rating_scale.min = *rating_min;
    if (rating_max) cfg.data.params.rating_scale.max = *rating_max;
    if (orientation) cfg.data.params.orientation = cs::parse_rating_orientation(*orientation);
  }
};

cs::ExperimentConfig load_config(const GlobalOptions& g) {
  auto cfg = g.config_path.empty()
                 ? cs::ExperimentConfig::defaults()
                 : cs::ExperimentConfig::from_document(cs::KeyValueDocument::load(g.config_path));
  if (g.seed) {
    const std::size_t count = cfg.seeds.size();
    cfg.seeds.clear();
    for (std::size_t k = 0; k < count; ++k) cfg.seeds.push_back(*g.seed + k);
  }
  return cfg;
}

void print_aggregates(const std::vector<cs::MethodAggregate>& rows, std::string_view format,
                      bool scaling) {
  if (format == "json") {
    std::cout << cs::aggregate_json(rows);
  } else if (format == "csv") {
    std::cout << (scaling ? cs::scaling_csv(rows) : cs::aggregate_csv(rows));
  } else if (!scaling) {
    std::cout << cs::aggregate_text(rows);
  } else {
    std::size_t current = 0;
    std::vector<cs::MethodAggregate> block;
    auto flush = [&] {
      if (block.empty()) return;
      std::cout << "N = " << current << "\n" << cs::aggregate_text(block) << "\n";
      block.clear();
    };
    for (const auto& row : rows) {
      if (row.n_train != current) flush();
      current = row.n_train;
      block.push_back(row);
    }
    flush();
  }
}

void report_written(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cerr << "wrote " << p.string() << "\n";
}

int cmd_experiment(const GlobalOptions& g, const DataOptions& data,
                   const std::vector<std::string>& methods, std::optional<std::size_t> threads,
                   const std::vector<std::size_t>& sizes, bool scaling) {
  auto cfg = load_config(g);
  data.apply(cfg);
  if (!methods.empty()) {
    cfg.methods.clear();
    for (const auto& m : methods) cfg.methods.push_back(cs::Method::parse(m));
  }
  if (threads) cfg.threads = *threads;
  if (!sizes.empty()) cfg.scaling_sizes = sizes;
  cfg.validate();

  const auto result = scaling ? cs::run_scaling(cfg) : cs::run_experiment(cfg);
  print_aggregates(scaling ? result.scaling : result.aggregates, g.format, scaling);
  if (!g.out_dir.empty()) report_written(cs::emit_reports(result, g.out_dir));
  return 0;
}

int cmd_hist(const GlobalOptions& g, const DataOptions& data, std::optional<std::size_t> bins) {
  auto cfg = load_config(g);
  data.apply(cfg);
  if (bins) cfg.histogram_bins = *bins;
  const auto dataset = cs::experiment_dataset(cfg, cfg.seeds.front());
  const auto hist = cs::delta_histogram(dataset, cfg.histogram_bins);
  if (g.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& b : hist) {
      out.push_back({{"low", b.low}, {"high", b.high}, {"count", b.count}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << cs::histogram_csv(hist);
  }
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    const auto path = std::filesystem::path(g.out_dir) / "histogram.csv";
    std::ofstream(path, std::ios::binary) << cs::histogram_csv(hist);
    std::cerr << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_gen(const GlobalOptions& g, cs::SyntheticConfig syn) {
  if (!g.config_path.empty()) {
    const auto cfg = load_config(g);
    if (cfg.data.kind == cs::DataSource::Kind::kSynthetic) {
      const auto seed = syn.seed;
      syn = cfg.data.synthetic;
      syn.seed = seed;
    }
  }
  if (g.seed) syn.seed = *g.seed;
  const auto data = cs::generate(syn);
  if (g.out_dir.empty()) {
    cs::write_csv(std::cout, data.dataset);
    return 0;
  }
  std::filesystem::create_directories(g.out_dir);
  const auto csv_path = std::filesystem::path(g.out_dir) / "synthetic.csv";
  cs::save_csv(csv_path, data.dataset);
  const auto w_path = std::filesystem::path(g.out_dir) / "true_weights.txt";
  std::ofstream w(w_path, std::ios::binary);
  for (const double v : data.true_weights) w << cs::text::format_double(v) << "\n";
  std::cerr << "wrote " << csv_path.string() << "\nwrote " << w_path.string() << "\n";
  return 0;
}

int cmd_eval(const GlobalOptions& g, const DataOptions& data, const std::string& predictions,
             bool scores_are_deltas) {
  auto cfg = load_config(g);
  data.apply(cfg);
  if (cfg.data.kind != cs::DataSource::Kind::kCsv) {
    throw std::invalid_argument("eval needs a CSV dataset (--data or data.path)");
  }
  const auto dataset = cs::experiment_dataset(cfg, 0);
  const auto preds = cs::load_predictions(predictions, dataset.size());
  const auto r = cs::evaluate(dataset, preds, scores_are_deltas);
  using cs::text::format_double;
  if (g.format == "json") {
    nlohmann::ordered_json out{{"n", r.n}, {"nec", r.nec}, {"error_rate", r.error_rate}};
    out["ratio"] = r.ratio ? nlohmann::ordered_json(*r.ratio) : nlohmann::ordered_json(nullptr);
    out["delta_mae"] =
        r.delta_mae ? nlohmann::ordered_json(*r.delta_mae) : nlohmann::ordered_json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "n,nec,error_rate,ratio,delta_mae\n"
              << r.n << "," << format_double(r.nec) << "," << format_double(r.error_rate) << ","
              << (r.ratio ? format_double(*r.ratio) : "") << ","
              << (r.delta_mae ? format_double(*r.delta_mae) : "") << "\n";
  } else {
    std::cout << "examples    " << r.n << "\n"
              << "NEC         " << cs::text::format_fixed(r.nec * 100.0, 2) << "%\n"
              << "error rate  " << cs::text::format_fixed(r.error_rate * 100.0, 2) << "%\n"
              << "error/NEC   " << (r.ratio ? cs::text::format_fixed(*r.ratio, 2) : "n/a")
              << "\n";
    if (r.delta_mae) std::cout << "delta MAE   " << format_double(*r.delta_mae) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instance-level cost-sensitive evaluation and training study"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Key-value experiment config")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out_dir, "Output directory for reports");
  app.add_option("--seed", g.seed, "Base seed (replaces the config's seed list, same count)");
  app.add_option("--format", g.format, "Console output format")
      ->check(CLI::IsMember({"csv", "text", "json"}));

  DataOptions data;
  std::vector<std::string> methods;
  std::optional<std::size_t> threads;
  std::vector<std::size_t> sizes;

  auto* run = app.add_subcommand("run", "Compare training methods across seeds");
  auto* scale = app.add_subcommand("scale", "Learning curves over training-set sizes");
  for (auto* cmd : {run, scale}) {
    cmd->fallthrough();
    data.attach(cmd);
    cmd->add_option("--methods", methods,
                    "standard, weighted, p_up, tdown30, tdown50, tdown70, regression")
        ->delimiter(',');
    cmd->add_option("--threads", threads, "Seeds run concurrently");
  }
  scale->add_option("--sizes", sizes, "Training-set sizes, comma separated")->delimiter(',');

  std::optional<std::size_t> bins;
  auto* hist = app.add_subcommand("hist", "Histogram of signed costs");
  hist->fallthrough();
  data.attach(hist);
  hist->add_option("--bins", bins, "Number of equal-width bins")->check(CLI::PositiveNumber);

  cs::SyntheticConfig syn;
  auto* gen = app.add_subcommand("gen", "Emit a synthetic dataset as CSV");
  gen->fallthrough();
  gen->add_option("--n", syn.n, "Examples")->capture_default_str();
  gen->add_option("--dim", syn.dim, "Feature dimension")->capture_default_str();
  gen->add_option("--weight-norm", syn.weight_norm, "Norm of the true weights")
      ->capture_default_str();
  gen->add_option("--noise-sigma", syn.noise_sigma, "Standard deviation of cost noise")
      ->capture_default_str();

  std::string predictions;
  bool scores_are_deltas = false;
  auto* eval = app.add_subcommand("eval", "Score a prediction file against a dataset");
  eval->fallthrough();
  data.attach(eval);
  eval->add_option("--predictions", predictions, "CSV with index,label[,score]")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_flag("--scores-are-deltas", scores_are_deltas,
                 "Treat the score column as delta estimates and report MAE");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_experiment(g, data, methods, threads, {}, false);
    if (*scale) return cmd_experiment(g, data, methods, threads, sizes, true);
    if (*hist) return cmd_hist(g, data, bins);
    if (*gen) return cmd_gen(g, syn);
    if (*eval) return cmd_eval(g, data, predictions, scores_are_deltas);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
