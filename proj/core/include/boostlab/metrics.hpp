#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace boostlab {

/// K x K contingency counts; rows are true classes, columns are predicted
/// classes.
struct ConfusionMatrix {
  int n_classes = 0;
  std::vector<std::int64_t> counts;  // row-major K x K

  std::int64_t at(int truth, int predicted) const {
    return counts[static_cast<std::size_t>(truth) * n_classes + predicted];
  }
  std::int64_t total() const;
  std::int64_t trace() const;
};

/// Fraction of positions where the two label sequences agree.
double accuracy(std::span<const int> predictions, std::span<const int> truth);

ConfusionMatrix confusion(std::span<const int> predictions, std::span<const int> truth,
                          int n_classes);

struct LearningCurvePoint {
  int round = 0;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
};

using LearningCurve = std::vector<LearningCurvePoint>;

}  // namespace boostlab
