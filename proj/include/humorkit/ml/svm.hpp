#pragma once

#include <cstdint>
#include <vector>

#include "humorkit/ml/dataset.hpp"

namespace humorkit::ml {

struct SvmParams {
  double lambda = 1e-4;
  int epochs = 100;
  std::uint64_t seed = 0;
};

/// Linear SVM. `objective_history[e]` is the regularized hinge objective on the
/// training set after epoch e + 1 (not serialized).
struct SvmModel {
  Eigen::VectorXd weights;
  double bias = 0.0;
  SvmParams params;
  std::vector<double> objective_history;
};

/// Stochastic subgradient descent (Pegasos): step 1/(lambda t), one pass per
/// epoch over a seeded shuffle. Expects standardized features.
SvmModel svm_fit(const Dataset& train, const SvmParams& params = {});

double svm_decision(const SvmModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// Positive iff the decision value is > 0.
Label svm_predict(const SvmModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// +1 for Positive, -1 for Negative.
Eigen::VectorXd label_signs(const std::vector<Label>& labels);

}  // namespace humorkit::ml
