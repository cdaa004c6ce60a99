#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "boostlab/boosting.hpp"
#include "boostlab/dataset.hpp"
#include "boostlab/gradboost.hpp"
#include "boostlab/metrics.hpp"

namespace boostlab {

struct DatasetConfig {
  std::filesystem::path path;
  PreprocessConfig preprocess;
};

/// One model to fit and evaluate; exactly one of the two configs applies.
struct ModelConfig {
  std::string name;
  std::variant<BoostConfig, GBConfig> config;
};

struct ExperimentConfig {
  DatasetConfig dataset;
  SplitSpec split;
  std::vector<ModelConfig> models;  // nonempty, unique names
  std::filesystem::path output_dir = "out";
};

struct RoundSummary {
  int round = 0;
  double epsilon = 0.0;
  double alpha = 0.0;
};

struct ModelReport {
  std::string name;
  bool ok = false;
  std::string error;  // set when ok is false
  double overall_accuracy = 0.0;  // on the test split
  double train_accuracy = 0.0;
  std::vector<RoundSummary> rounds;  // boosting models only
  ConfusionMatrix confusion_matrix;  // on the test split
  LearningCurve curve;
  double duration_seconds = 0.0;
};

struct DatasetSummary {
  std::string path;
  std::size_t n_rows = 0;
  std::size_t n_features = 0;
  int n_classes = 0;
  std::vector<std::string> class_names;
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
};

struct ReportBundle {
  std::string library_version;
  ExperimentConfig config;  // echo of the inputs
  DatasetSummary dataset;
  std::vector<ModelReport> models;  // one entry per configured model
  bool partial = false;             // true when any model failed
  double duration_seconds = 0.0;
};

/// Parses the documented JSON experiment config. Unknown keys and invalid
/// enum values are ConfigErrors.
ExperimentConfig load_experiment_config(const std::filesystem::path& json_path);
ExperimentConfig parse_experiment_config(const std::string& json_text);

/// Runs the full protocol: load, split, fit and evaluate every model
/// (models run concurrently; outputs do not depend on scheduling), then
/// writes report files into config.output_dir. A failing model is recorded
/// by name in its report entry and flags the bundle as partial; the other
/// models still complete. Dataset-level failures throw.
ReportBundle run_experiment(const ExperimentConfig& config);

/// Writes results.json, curve.csv and one confusion_<model>.csv per
/// successful model. Numeric output is deterministic; only the duration
/// fields differ between identical runs.
void emit_reports(const ReportBundle& bundle, const std::filesystem::path& dir);

/// curve.csv only; used by the `curve` CLI subcommand.
void emit_curve_csv(const ReportBundle& bundle, const std::filesystem::path& dir);

std::string bundle_to_json(const ReportBundle& bundle);

}  // namespace boostlab
