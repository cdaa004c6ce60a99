#pragma once

#include <span>
#include <variant>
#include <vector>

#include "boostlab/dataset.hpp"

namespace boostlab {

enum class WeakLearnerKind { Gnb, Stump };

struct WeakLearnerSpec {
  WeakLearnerKind kind = WeakLearnerKind::Gnb;
  double variance_smoothing = 1e-9;  // gnb only; relative variance floor factor
};

/// Per-class probabilities; entries are >= 0 and sum to 1 within 1e-12.
using ProbVector = std::vector<double>;

/// Weighted Gaussian naive Bayes: per-class priors are the class's share of
/// total instance weight; per-class per-feature means and variances are
/// weight-weighted (population form). Every variance carries an additive
/// floor so log densities stay finite.
struct GaussianNBModel {
  std::vector<double> priors;     // K
  std::vector<double> means;      // K x d, row-major by class
  std::vector<double> variances;  // K x d, all >= smoothing
  double smoothing = 0.0;         // the additive floor actually applied
  int n_classes = 0;
  std::size_t n_features = 0;

  double mean_at(int k, std::size_t j) const { return means[static_cast<std::size_t>(k) * n_features + j]; }
  double variance_at(int k, std::size_t j) const { return variances[static_cast<std::size_t>(k) * n_features + j]; }
};

/// Single-feature threshold classifier: x[feature] <= threshold predicts
/// left_class, otherwise right_class.
struct StumpModel {
  std::size_t feature_index = 0;
  double threshold = 0.0;
  int left_class = 0;
  int right_class = 0;
  int n_classes = 0;
};

/// Fits the weighted GNB model. The variance floor is
/// variance_smoothing * max_j(weighted global variance of feature j),
/// falling back to variance_smoothing itself when every feature is
/// constant. Throws TrainingError when some class has zero total weight.
GaussianNBModel gnb_fit(const Dataset& data, std::span<const double> weights,
                        double variance_smoothing = 1e-9);

/// Posterior over classes for one instance, computed in log space and
/// normalized with log-sum-exp.
ProbVector gnb_predict_proba(const GaussianNBModel& model, std::span<const double> x);

/// Exhaustive weighted 0/1-error minimizer over every
/// (feature, midpoint-between-consecutive-distinct-values) threshold and
/// every ordered (left, right) pair of observed labels. Ties break toward
/// the lowest feature index, then lowest threshold, then lowest left label,
/// then lowest right label. When no feature has two distinct values the
/// result is a constant stump predicting the max-weight class.
StumpModel stump_fit(const Dataset& data, std::span<const double> weights);

int predict(const GaussianNBModel& model, std::span<const double> x);
int predict(const StumpModel& model, std::span<const double> x);

using WeakModel = std::variant<GaussianNBModel, StumpModel>;

WeakModel fit_weak_learner(const WeakLearnerSpec& spec, const Dataset& data,
                           std::span<const double> weights);

/// Hard label; the argmax of learner_predict_proba with ties toward the
/// lower class index.
int learner_predict(const WeakModel& model, std::span<const double> x);

/// Class probabilities; a stump emits a one-hot vector on its predicted
/// label, which is what makes the dynamic update reduce exactly to the
/// indicator update for hard base learners.
ProbVector learner_predict_proba(const WeakModel& model, std::span<const double> x);

}  // namespace boostlab
