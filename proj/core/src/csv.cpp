#include "costsense/csv.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "costsense/text.hpp"

namespace costsense {

namespace {

std::vector<std::string> schema_columns(CsvSchema schema) {
  switch (schema) {
    case CsvSchema::kVotes:
      return {"n_yes", "n_no"};
    case CsvSchema::kThreshold:
      return {"z"};
    case CsvSchema::kRating:
      return {"score"};
    case CsvSchema::kPrecomputedDelta:
      return {"delta"};
  }
  return {};
}

CostSource source_of(CsvSchema schema) {
  switch (schema) {
    case CsvSchema::kVotes:
      return CostSource::kVotes;
    case CsvSchema::kThreshold:
      return CostSource::kThreshold;
    case CsvSchema::kRating:
      return CostSource::kRating;
    case CsvSchema::kPrecomputedDelta:
      return CostSource::kPrecomputed;
  }
  return CostSource::kPrecomputed;
}

// Reads one line, dropping a trailing '\r'. Returns false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  return true;
}

std::vector<std::string_view> fields_of(std::string_view line) {
  auto fields = text::split(line, ',');
  for (auto& f : fields) f = text::trim(f);
  return fields;
}

double derive_delta(CsvSchema schema, const SchemaParams& params,
                    std::span<const std::string_view> cols) {
  switch (schema) {
    case CsvSchema::kVotes:
      return votes_to_delta({text::parse_uint(cols[0], "n_yes"), text::parse_uint(cols[1], "n_no")});
    case CsvSchema::kThreshold:
      return threshold_to_delta(text::parse_double(cols[0], "z"), params.tau);
    case CsvSchema::kRating:
      return rating_to_delta(text::parse_double(cols[0], "score"), params.rating_scale,
                             params.orientation);
    case CsvSchema::kPrecomputedDelta:
      return text::parse_double(cols[0], "delta");
  }
  return 0.0;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError(0, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::string_view to_string(CsvSchema schema) {
  switch (schema) {
    case CsvSchema::kVotes:
      return "votes";
    case CsvSchema::kThreshold:
      return "threshold";
    case CsvSchema::kRating:
      return "rating";
    case CsvSchema::kPrecomputedDelta:
      return "precomputed_delta";
  }
  return "unknown";
}

CsvSchema parse_csv_schema(std::string_view name) {
  if (name == "votes") return CsvSchema::kVotes;
  if (name == "threshold") return CsvSchema::kThreshold;
  if (name == "rating") return CsvSchema::kRating;
  if (name == "precomputed_delta") return CsvSchema::kPrecomputedDelta;
  throw std::invalid_argument("unknown CSV schema '" + std::string(name) + "'");
}

CsvError::CsvError(std::size_t line, std::string message, std::string source)
    : std::runtime_error((source.empty() ? "" : source + ": ") +
                         (line > 0 ? "line " + std::to_string(line) + ": " : "") + message),
      line_(line),
      message_(std::move(message)) {}

Dataset read_csv(std::istream& in, CsvSchema schema, const SchemaParams& params,
                 std::string name) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw CsvError(0, "missing header row");

  const auto header = fields_of(line);
  const auto expected = schema_columns(schema);
  if (header.size() < expected.size()) {
    throw CsvError(line_no, "header has " + std::to_string(header.size()) +
                                " columns; schema '" + std::string(to_string(schema)) +
                                "' needs at least " + std::to_string(expected.size()));
  }
  const std::size_t dim = header.size() - expected.size();
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (header[dim + k] != expected[k]) {
      throw CsvError(line_no, "expected column '" + expected[k] + "' at position " +
                                  std::to_string(dim + k + 1) + ", found '" +
                                  std::string(header[dim + k]) + "'");
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (header[j].empty()) throw CsvError(line_no, "empty feature column name");
  }

  Dataset dataset(std::move(name), source_of(schema));
  while (next_line(in, line, line_no)) {
    if (text::trim(line).empty()) continue;
    const auto cols = fields_of(line);
    if (cols.size() != header.size()) {
      throw CsvError(line_no, "expected " + std::to_string(header.size()) + " columns, found " +
                                  std::to_string(cols.size()));
    }
    try {
      CostedExample ex;
      ex.features.reserve(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const double v = text::parse_double(cols[j], "feature");
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature");
        ex.features.push_back(v);
      }
      ex.delta = derive_delta(schema, params, std::span(cols).subspan(dim));
      dataset.add(std::move(ex));
    } catch (const std::invalid_argument& e) {
      throw CsvError(line_no, e.what());
    }
  }
  return dataset;
}

Dataset load_csv(const std::filesystem::path& path, CsvSchema schema,
                 const SchemaParams& params) {
  auto in = open_input(path);
  try {
    return read_csv(in, schema, params, path.stem().string());
  } catch (const CsvError& e) {
    throw CsvError(e.line(), e.message(), path.string());
  }
}

void write_csv(std::ostream& out, const Dataset& dataset) {
  for (std::size_t j = 0; j < dataset.dim(); ++j) out << 'f' << j << ',';
  out << "delta\n";
  for (const auto& ex : dataset.examples()) {
    for (const double v : ex.features) out << text::format_double(v) << ',';
    out << text::format_double(ex.delta) << '\n';
  }
}

void save_csv(const std::filesystem::path& path, const Dataset& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write_csv(out, dataset);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Predictions read_predictions(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw CsvError(0, "missing header row");
  const auto header = fields_of(line);
  const bool with_scores = header.size() == 3;
  if (header.size() < 2 || header.size() > 3 || header[0] != "index" || header[1] != "label" ||
      (with_scores && header[2] != "score")) {
    throw CsvError(line_no, "prediction header must be 'index,label' or 'index,label,score'");
  }

  std::vector<std::optional<Label>> labels(n);
  std::vector<double> scores(with_scores ? n : 0);
  std::size_t rows = 0;
  while (next_line(in, line, line_no)) {
    if (text::trim(line).empty()) continue;
    const auto cols = fields_of(line);
    if (cols.size() != header.size()) {
      throw CsvError(line_no, "expected " + std::to_string(header.size()) + " columns, found " +
                                  std::to_string(cols.size()));
    }
    try {
      const auto index = text::parse_uint(cols[0], "index");
      if (index >= n) {
        throw std::invalid_argument("index " + std::to_string(index) + " out of range for " +
                                    std::to_string(n) + " examples");
      }
      if (labels[index]) {
        throw std::invalid_argument("duplicate index " + std::to_string(index));
      }
      labels[index] = label_from_int(static_cast<int>(text::parse_int(cols[1], "label")));
      if (with_scores) scores[index] = text::parse_double(cols[2], "score");
      ++rows;
    } catch (const std::invalid_argument& e) {
      throw CsvError(line_no, e.what());
    }
  }
  if (rows != n) {
    throw CsvError(0, "predictions cover " + std::to_string(rows) + " of " + std::to_string(n) +
                          " examples");
  }
  Predictions out;
  out.labels.reserve(n);
  for (const auto& y : labels) out.labels.push_back(*y);
  if (with_scores) out.scores = std::move(scores);
  return out;
}

Predictions load_predictions(const std::filesystem::path& path, std::size_t n) {
  auto in = open_input(path);
  try {
    return read_predictions(in, n);
  } catch (const CsvError& e) {
    throw CsvError(e.line(), e.message(), path.string());
  }
}

void write_predictions(std::ostream& out, const Predictions& preds) {
  out << (preds.scores ? "index,label,score\n" : "index,label\n");
  for (std::size_t i = 0; i < preds.labels.size(); ++i) {
    out << i << ',' << to_int(preds.labels[i]);
    if (preds.scores) out << ',' << text::format_double((*preds.scores)[i]);
    out << '\n';
  }
}

}  // namespace costsense
