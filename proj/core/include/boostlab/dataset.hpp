#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace boostlab {

/// In-memory tabular dataset: an N x d matrix of finite reals plus
/// integer-encoded labels in [0, K).
struct Dataset {
  std::vector<double> features;  // row-major, n_rows * n_features
  std::vector<int> labels;       // size n_rows, values in [0, n_classes)
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;
  std::size_t n_rows = 0;
  std::size_t n_features = 0;
  int n_classes = 0;

  double at(std::size_t row, std::size_t col) const {
    return features[row * n_features + col];
  }
  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * n_features, n_features};
  }

  /// Throws DataError if any structural invariant is broken: non-finite
  /// values, out-of-range labels, empty matrix, or K < 2.
  void validate() const;
};

enum class NumericImpute { Mean, Median };
enum class CategoricalImpute { Mode };

/// Identifies the label column by header name or zero-based index.
using ColumnRef = std::variant<std::string, std::size_t>;

struct PreprocessConfig {
  NumericImpute impute_numeric = NumericImpute::Mean;
  CategoricalImpute impute_categorical = CategoricalImpute::Mode;
  bool drop_duplicates = true;
  ColumnRef label_column = std::string("class");
  char delimiter = ',';
};

/// Loads an RFC-4180-style CSV (header row required) into a Dataset.
///
/// Numeric columns are parsed as reals; a column is numeric when every
/// non-missing cell parses as a finite real. Other feature columns are
/// integer-encoded by first appearance of each distinct value. Labels are
/// encoded to [0, K) by lexicographic order of the distinct label strings,
/// so the encoding does not depend on row order. Empty cells and the
/// literals "NA" and "?" are missing and get imputed per config; exact
/// duplicate rows (compared as raw strings, before imputation) are removed
/// when drop_duplicates is set.
Dataset load_csv(const std::filesystem::path& path, const PreprocessConfig& config);

struct SplitSpec {
  double test_fraction = 0.3;
  std::uint64_t seed = 42;
  bool stratified = false;
};

struct TrainTestSplit {
  Dataset train;
  Dataset test;
};

/// Deterministic train/test partition; test size = round(N * test_fraction).
///
/// Indices are shuffled with SplitMix64 (see prng.hpp), so the same
/// (dataset, spec) pair gives the same partition on every platform. In
/// stratified mode per-class test counts are allocated by largest remainder
/// (ties toward the lower class index), which keeps class proportions
/// within one instance and the total exactly at round(N * test_fraction).
TrainTestSplit train_test_split(const Dataset& data, const SplitSpec& spec);

}  // namespace boostlab
