#pragma once

// CSV ingestion and emission.
//
// Header row required. Feature columns come first (any names, conventionally
// f0..f{d-1}); the schema's own columns trail them:
//
//   votes              ... ,n_yes,n_no   delta = ln((n_yes + 1) / (n_no + 1))
//   threshold          ... ,z            delta = z - tau
//   rating             ... ,score        delta = +-(midpoint - score)
//   precomputed_delta  ... ,delta        delta read as-is
//
// Decimal point '.', no thousands separators, "\n" or "\r\n" line endings.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "costsense/cost_model.hpp"
#include "costsense/dataset.hpp"
#include "costsense/metrics.hpp"

namespace costsense {

enum class CsvSchema { kVotes, kThreshold, kRating, kPrecomputedDelta };

std::string_view to_string(CsvSchema schema);
CsvSchema parse_csv_schema(std::string_view name);

struct SchemaParams {
  double tau = 0.0;
  RatingScale rating_scale;
  RatingOrientation orientation = RatingOrientation::kMidpointMinusScore;
};

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, std::string message, std::string source = {});
  // 1-based; 0 when the error is not tied to a line.
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

Dataset read_csv(std::istream& in, CsvSchema schema, const SchemaParams& params,
                 std::string name = "dataset");
Dataset load_csv(const std::filesystem::path& path, CsvSchema schema,
                 const SchemaParams& params);

/// Precomputed-delta schema with shortest round-trip numbers, so reloading
/// reproduces every value exactly.
void write_csv(std::ostream& out, const Dataset& dataset);
void save_csv(const std::filesystem::path& path, const Dataset& dataset);

/// Prediction file `index,label[,score]`: 0-based indices covering every
/// example of a dataset of size n exactly once, labels in {-1, +1}. Either all
/// rows carry a score or none do.
Predictions read_predictions(std::istream& in, std::size_t n);
Predictions load_predictions(const std::filesystem::path& path, std::size_t n);
void write_predictions(std::ostream& out, const Predictions& preds);

}  // namespace costsense
