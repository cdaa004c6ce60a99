#pragma once

#include <span>
#include <vector>

#include "boostlab/dataset.hpp"

namespace boostlab {

enum class GBLoss { Logistic };

struct GBConfig {
  int stages = 100;  // M
  GBLoss loss = GBLoss::Logistic;
  double gamma_max = 10.0;  // step sizes are searched over [0, gamma_max]
  double line_search_tolerance = 1e-6;
};

/// Regression weak learner for pseudo-residuals: x[feature] <= threshold
/// yields left_value, otherwise right_value.
struct RegressionStump {
  std::size_t feature_index = 0;
  double threshold = 0.0;
  double left_value = 0.0;
  double right_value = 0.0;

  double value(std::span<const double> x) const {
    return x[feature_index] <= threshold ? left_value : right_value;
  }
};

struct GBStage {
  RegressionStump stump;
  double gamma = 0.0;
};

/// Additive score model F(x) = initial_score + sum_m gamma_m * h_m(x) for
/// binary classification; positive scores predict class 1.
struct GBModel {
  double initial_score = 0.0;
  std::vector<GBStage> stages;
  GBLoss loss = GBLoss::Logistic;
  std::vector<double> training_loss;  // total loss after each stage
};

/// Total logistic loss sum_i ln(1 + e^(-y_i F_i)) over labels in {-1,+1},
/// computed with the softplus form that cannot overflow.
double logistic_loss(std::span<const double> labels_pm1, std::span<const double> scores);

/// Negative gradient of the logistic loss: r_i = y_i / (1 + e^(y_i F_i)).
std::vector<double> pseudo_residuals(std::span<const double> labels_pm1,
                                     std::span<const double> scores);

/// Golden-section search for the gamma in [0, gamma_max] minimizing
/// L(y, F + gamma * h). The loss is convex in gamma; gamma = 0 stays a
/// candidate so the chosen step never increases the loss. Throws
/// TrainingError when h is identically zero.
double line_search_gamma(std::span<const double> labels_pm1,
                         std::span<const double> scores,
                         std::span<const double> h_outputs, const GBConfig& config);

/// Binary-only gradient boosting: labels 0/1 map to -1/+1, the initial
/// score is the log-odds of the positive class, and each stage fits a
/// least-squares regression stump to the pseudo-residuals followed by a
/// line-searched step size. Throws TrainingError when K != 2.
GBModel fit_gradboost(const Dataset& train, const GBConfig& config);

struct GBPrediction {
  double score = 0.0;
  int label = 0;
};

/// Score and hard label; score > 0 predicts class 1, ties go to class 0.
GBPrediction gb_predict(const GBModel& model, std::span<const double> x);

}  // namespace boostlab
