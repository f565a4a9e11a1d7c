#include "humorkit/ml/svm.hpp"

#include <numeric>

#include "humorkit/error.hpp"
#include "humorkit/ml/kernels.hpp"
#include "humorkit/random.hpp"

namespace humorkit::ml {

Eigen::VectorXd label_signs(const std::vector<Label>& labels) {
  Eigen::VectorXd y(static_cast<Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) y(static_cast<Index>(i)) = labels[i] == Label::Positive ? 1.0 : -1.0;
  return y;
}

SvmModel svm_fit(const Dataset& train, const SvmParams& params) {
  train.validate();
  if (!(params.lambda > 0.0) || params.epochs < 1) {
    throw Error(ErrorCode::InvalidHyperparameter, "SVM needs lambda > 0 and epochs >= 1");
  }
  if (train.size() == 0) throw Error(ErrorCode::EmptyDataset, "SVM needs training rows");

  SvmModel m;
  m.params = params;
  m.weights = Eigen::VectorXd::Zero(train.dims());

  const Eigen::VectorXd y = label_signs(train.labels);
  const std::size_t positives = train.count(Label::Positive);
  if (positives == 0 || positives == static_cast<std::size_t>(train.size())) {
    // Single-class data: constant predictor of that class.
    m.bias = positives == 0 ? -1.0 : 1.0;
    m.objective_history.assign(static_cast<std::size_t>(params.epochs),
                               kernels::hinge_objective(m.weights, m.bias, train.rows, y, params.lambda));
    return m;
  }

  Rng rng(params.seed);
  std::vector<Index> order(static_cast<std::size_t>(train.size()));
  std::iota(order.begin(), order.end(), Index{0});
  const double lambda = params.lambda;
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    rng.shuffle(std::span<Index>(order));
    for (Index i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double margin = y(i) * (train.rows.row(i).dot(m.weights) + m.bias);
      const double shrink = 1.0 - eta * lambda;
      m.weights *= shrink;
      m.bias *= shrink;
      if (margin < 1.0) {
        m.weights += (eta * y(i)) * train.rows.row(i).transpose();
        m.bias += eta * y(i);
      }
    }
    m.objective_history.push_back(kernels::hinge_objective(m.weights, m.bias, train.rows, y, lambda));
  }
  return m;
}

double svm_decision(const SvmModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  if (row.size() != model.weights.size()) throw Error(ErrorCode::DimensionMismatch, "SVM input width mismatch");
  return model.weights.dot(row) + model.bias;
}

Label svm_predict(const SvmModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  return svm_decision(model, row) > 0.0 ? Label::Positive : Label::Negative;
}

}  // namespace humorkit::ml
