#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boostlab/dataset.hpp"
#include "boostlab/weak_learners.hpp"

namespace boostlab {

/// Normalized per-instance weight distribution: every entry > 0, sum = 1
/// within 1e-12.
struct WeightVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Rescales to sum 1. Throws TrainingError if the total is not positive.
  void normalize();
  /// Throws TrainingError when positivity or normalization is violated.
  void validate() const;
};

enum class BoostVariant { Standard, Dwa };
enum class AlphaRule { BinaryHalfLog, Samme };
enum class InitWeightsMode { Uniform, ClassBalanced };
enum class WorseThanRandomPolicy { Stop, SkipAndReset };

struct BoostConfig {
  int rounds = 50;  // T
  BoostVariant variant = BoostVariant::Standard;
  // Defaults to BinaryHalfLog for two classes and Samme otherwise.
  std::optional<AlphaRule> alpha_rule;
  double epsilon_min = 1e-10;
  // Water-filling cap on any single weight; disabled by default.
  std::optional<double> soft_margin_cap;
  InitWeightsMode init_weights = InitWeightsMode::Uniform;
  WeakLearnerSpec base;
  WorseThanRandomPolicy worse_than_random_policy = WorseThanRandomPolicy::Stop;
};

struct RoundRecord {
  double epsilon = 0.0;  // weighted indicator error of the round's learner
  double alpha = 0.0;    // vote strength
  WeakModel learner;
  bool accepted = true;
};

struct Ensemble {
  std::vector<RoundRecord> rounds;  // accepted rounds, in fit order
  int n_classes = 0;
  AlphaRule alpha_rule = AlphaRule::BinaryHalfLog;
  BoostVariant variant = BoostVariant::Standard;
};

/// Uniform: w_i = 1/N. ClassBalanced: w_i = 1 / (K * count(class of i)), so
/// every class carries equal total mass; requires every class nonempty.
WeightVector init_weights(std::size_t n, InitWeightsMode mode,
                          std::span<const int> labels, int n_classes);

/// Weighted misclassification rate in [0, 1].
double weighted_error(std::span<const int> predictions, std::span<const int> labels,
                      const WeightVector& weights);

/// Vote strength from the weighted error. Epsilon is first clamped to
/// [epsilon_min, 1 - epsilon_min] so the result is always finite.
/// BinaryHalfLog: 0.5 * ln((1-e)/e). Samme: ln((1-e)/e) + ln(K-1).
double alpha_from_error(double epsilon, int n_classes, AlphaRule rule,
                        double epsilon_min = 1e-10);

/// Multiplies every misclassified weight by e^alpha, then renormalizes.
WeightVector update_weights_indicator(const WeightVector& weights, double alpha,
                                      const std::vector<bool>& correct);

/// Confidence-rated update: w_i *= e^(alpha * e_i) with
/// e_i = 1 - p(true class | x_i), then renormalizes. Each e_i must lie in
/// [0, 1] (a 1e-9 slack absorbs probability round-off); anything further
/// out signals a broken ProbVector and throws TrainingError.
WeightVector update_weights_dynamic(const WeightVector& weights, double alpha,
                                    std::span<const double> per_instance_error);

/// Water-filling cap: weights above the cap are fixed at the cap and the
/// remaining mass is spread proportionally over the rest, repeating until
/// every weight is <= cap. The cap must be feasible (cap >= 1/N).
WeightVector clip_soft_margin(const WeightVector& weights, double cap);

/// Optional per-round trace for oracle comparisons: epsilon, alpha, the
/// learner's train predictions and the weight vector after the round's
/// update (and clip), for every attempted round including rejected ones.
struct FitTrace {
  struct Round {
    double epsilon = 0.0;
    double alpha = 0.0;
    bool accepted = true;
    std::vector<int> predictions;
    std::vector<double> weights_after;
  };
  std::vector<double> initial_weights;
  std::vector<Round> rounds;
};

/// Boosting loop shared by both variants. Each round fits the base learner
/// on the current weights and computes the weighted indicator error e_t.
/// A round with e_t >= (K-1)/K triggers the worse-than-random policy:
/// Stop truncates the ensemble; SkipAndReset discards the learner and
/// resets weights to the configured initialization (at most 5 consecutive
/// resets). Accepted rounds update weights by the variant's rule
/// (Standard: indicator; Dwa: per-instance error from the learner's
/// probabilities) and apply the soft-margin clip when configured.
/// Throws TrainingError when no round is accepted.
Ensemble fit_adaboost(const Dataset& train, const BoostConfig& config,
                      FitTrace* trace = nullptr);

/// argmax_k of sum_t alpha_t * I(h_t(x) = k); ties toward the lower class
/// index. For K = 2 this coincides with the sign-of-weighted-sum form.
int predict_ensemble(const Ensemble& model, std::span<const double> x);

struct StagedAccuracyPoint {
  int round = 0;  // 1-based prefix length
  double accuracy = 0.0;
};

/// Accuracy of the ensemble truncated to its first t rounds, t = 1..T.
std::vector<StagedAccuracyPoint> staged_accuracy(const Ensemble& model,
                                                 const Dataset& data);

}  // namespace boostlab
