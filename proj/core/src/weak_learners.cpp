#include "boostlab/weak_learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "boostlab/errors.hpp"

namespace boostlab {
namespace {

double weight_total(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw TrainingError("weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw TrainingError("total weight must be positive");
  return total;
}

}  // namespace

GaussianNBModel gnb_fit(const Dataset& data, std::span<const double> weights,
                        double variance_smoothing) {
  if (weights.size() != data.n_rows)
    throw TrainingError("gnb_fit: weight count does not match row count");
  if (data.n_features == 0) throw TrainingError("gnb_fit: no features");
  if (!(variance_smoothing > 0.0))
    throw ConfigError("gnb_fit: variance smoothing factor must be positive");

  const std::size_t n = data.n_rows;
  const std::size_t d = data.n_features;
  const auto k = static_cast<std::size_t>(data.n_classes);
  const double total = weight_total(weights);

  GaussianNBModel model;
  model.n_classes = data.n_classes;
  model.n_features = d;
  model.priors.assign(k, 0.0);
  model.means.assign(k * d, 0.0);
  model.variances.assign(k * d, 0.0);

  for (std::size_t i = 0; i < n; ++i)
    model.priors[static_cast<std::size_t>(data.labels[i])] += weights[i] / total;

  for (std::size_t c = 0; c < k; ++c)
    if (!(model.priors[c] > 0.0))
      throw TrainingError("gnb_fit: class '" + data.class_names[c] +
                          "' has zero total weight");

  // Weighted means.
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(data.labels[i]);
    const double wi = weights[i] / total;
    const auto row = data.row(i);
    for (std::size_t j = 0; j < d; ++j) model.means[c * d + j] += wi * row[j];
  }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < d; ++j) model.means[c * d + j] /= model.priors[c];

  // Weighted population variances per class, and the weighted global
  // variance per feature that anchors the smoothing floor. Both use the
  // same weights, so zero-weight rows cannot influence the model.
  std::vector<double> global_mean(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = weights[i] / total;
    const auto row = data.row(i);
    for (std::size_t j = 0; j < d; ++j) global_mean[j] += wi * row[j];
  }
  std::vector<double> global_var(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(data.labels[i]);
    const double wi = weights[i] / total;
    const auto row = data.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      const double dc = row[j] - model.means[c * d + j];
      model.variances[c * d + j] += wi * dc * dc;
      const double dg = row[j] - global_mean[j];
      global_var[j] += wi * dg * dg;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < d; ++j) model.variances[c * d + j] /= model.priors[c];

  double max_global_var = 0.0;
  for (double v : global_var) max_global_var = std::max(max_global_var, v);
  model.smoothing = variance_smoothing * max_global_var;
  if (!(model.smoothing > 0.0)) model.smoothing = variance_smoothing;
  for (double& v : model.variances) v += model.smoothing;

  return model;
}

ProbVector gnb_predict_proba(const GaussianNBModel& model, std::span<const double> x) {
  const auto k = static_cast<std::size_t>(model.n_classes);
  const std::size_t d = model.n_features;
  ProbVector log_post(k);

  for (std::size_t c = 0; c < k; ++c) {
    double ll = std::log(model.priors[c]);
    for (std::size_t j = 0; j < d; ++j) {
      const double var = model.variances[c * d + j];
      const double diff = x[j] - model.means[c * d + j];
      ll += -0.5 * std::log(2.0 * std::numbers::pi * var) - diff * diff / (2.0 * var);
    }
    log_post[c] = ll;
  }

  const double max_ll = *std::max_element(log_post.begin(), log_post.end());
  double denom = 0.0;
  for (double& v : log_post) {
    v = std::exp(v - max_ll);
    denom += v;
  }
  for (double& v : log_post) v /= denom;
  return log_post;
}

int predict(const GaussianNBModel& model, std::span<const double> x) {
  const ProbVector p = gnb_predict_proba(model, x);
  int best = 0;
  for (int c = 1; c < model.n_classes; ++c)
    if (p[static_cast<std::size_t>(c)] > p[static_cast<std::size_t>(best)]) best = c;
  return best;
}

int predict(const StumpModel& model, std::span<const double> x) {
  return x[model.feature_index] <= model.threshold ? model.left_class
                                                   : model.right_class;
}

StumpModel stump_fit(const Dataset& data, std::span<const double> weights) {
  if (weights.size() != data.n_rows)
    throw TrainingError("stump_fit: weight count does not match row count");
  const std::size_t n = data.n_rows;
  const std::size_t d = data.n_features;
  weight_total(weights);

  std::vector<int> observed;
  for (int y : data.labels)
    if (std::find(observed.begin(), observed.end(), y) == observed.end())
      observed.push_back(y);
  std::sort(observed.begin(), observed.end());

  StumpModel best;
  best.n_classes = data.n_classes;
  double best_error = std::numeric_limits<double>::infinity();
  bool found_split = false;

  std::vector<double> values;
  for (std::size_t f = 0; f < d; ++f) {
    values.clear();
    for (std::size_t i = 0; i < n; ++i) values.push_back(data.at(i, f));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) continue;

    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
      const double threshold = 0.5 * (values[t] + values[t + 1]);
      for (int left : observed) {
        for (int right : observed) {
          // Direct index-order summation; candidates misclassifying the
          // same instance set therefore produce bit-identical errors and
          // tie-breaking is exact.
          double err = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            const int pred = data.at(i, f) <= threshold ? left : right;
            if (pred != data.labels[i]) err += weights[i];
          }
          if (err < best_error) {
            best_error = err;
            best.feature_index = f;
            best.threshold = threshold;
            best.left_class = left;
            best.right_class = right;
            found_split = true;
          }
        }
      }
    }
  }

  if (!found_split) {
    // Every feature is constant: no usable split. Fall back to a constant
    // prediction of the max-weight class (ties toward the lower label).
    std::vector<double> class_weight(static_cast<std::size_t>(data.n_classes), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      class_weight[static_cast<std::size_t>(data.labels[i])] += weights[i];
    int top = 0;
    for (int c = 1; c < data.n_classes; ++c)
      if (class_weight[static_cast<std::size_t>(c)] >
          class_weight[static_cast<std::size_t>(top)])
        top = c;
    best.feature_index = 0;
    best.threshold = d > 0 ? data.at(0, 0) : 0.0;
    best.left_class = top;
    best.right_class = top;
  }
  return best;
}

WeakModel fit_weak_learner(const WeakLearnerSpec& spec, const Dataset& data,
                           std::span<const double> weights) {
  switch (spec.kind) {
    case WeakLearnerKind::Gnb:
      return gnb_fit(data, weights, spec.variance_smoothing);
    case WeakLearnerKind::Stump:
      return stump_fit(data, weights);
  }
  throw ConfigError("unknown weak learner kind");
}

int learner_predict(const WeakModel& model, std::span<const double> x) {
  return std::visit([&](const auto& m) { return predict(m, x); }, model);
}

ProbVector learner_predict_proba(const WeakModel& model, std::span<const double> x) {
  if (const auto* gnb = std::get_if<GaussianNBModel>(&model))
    return gnb_predict_proba(*gnb, x);
  const auto& stump = std::get<StumpModel>(model);
  ProbVector p(static_cast<std::size_t>(stump.n_classes), 0.0);
  p[static_cast<std::size_t>(predict(stump, x))] = 1.0;
  return p;
}

}  // namespace boostlab
