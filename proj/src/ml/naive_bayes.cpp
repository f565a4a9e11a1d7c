#include "humorkit/ml/naive_bayes.hpp"

#include <cmath>
#include <limits>

#include "humorkit/error.hpp"
#include "humorkit/ml/kernels.hpp"

namespace humorkit::ml {

namespace {

Eigen::Vector2d class_log_priors(const Dataset& train) {
  const double n = static_cast<double>(train.size());
  Eigen::Vector2d lp;
  for (int c = 0; c < 2; ++c) {
    const auto count = static_cast<double>(train.count(class_label(c)));
    lp(c) = count > 0 ? std::log(count / n) : -std::numeric_limits<double>::infinity();
  }
  return lp;
}

Label argmax_negative_ties(const Eigen::Vector2d& scores) {
  return scores(0) > scores(1) ? Label::Positive : Label::Negative;
}

void check_width(Index expected, Index got) {
  if (expected != got) {
    throw Error(ErrorCode::DimensionMismatch,
                "row has " + std::to_string(got) + " features, model expects " + std::to_string(expected));
  }
}

}  // namespace

MnbModel mnb_fit(const Dataset& train, double alpha) {
  train.validate();
  if (train.size() == 0) throw Error(ErrorCode::EmptyDataset, "MNB needs training rows");
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidHyperparameter, "MNB alpha must be > 0");
  for (Index j = 0; j < train.dims(); ++j) {
    if ((train.rows.col(j).array() < 0.0).any()) {
      throw Error(ErrorCode::NegativeFeatureValue, train.feature_names[static_cast<std::size_t>(j)]);
    }
  }

  MnbModel m;
  m.alpha = alpha;
  m.log_prior = class_log_priors(train);
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(2, train.dims());
  for (Index i = 0; i < train.size(); ++i) {
    mass.row(class_index(train.labels[static_cast<std::size_t>(i)])) += train.rows.row(i);
  }
  m.log_theta.resize(2, train.dims());
  for (int c = 0; c < 2; ++c) {
    const double denom = mass.row(c).sum() + alpha * static_cast<double>(train.dims());
    m.log_theta.row(c) = ((mass.row(c).array() + alpha) / denom).log();
  }
  return m;
}

Eigen::Vector2d mnb_log_joint(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  check_width(model.log_theta.cols(), row.size());
  Eigen::Vector2d scores = model.log_prior;
  for (int c = 0; c < 2; ++c) {
    // 0 * log theta stays 0 even when the prior is -inf
    scores(c) += model.log_theta.row(c).dot(row);
  }
  return scores;
}

Eigen::Vector2d mnb_log_posterior(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  const Eigen::Vector2d joint = mnb_log_joint(model, row);
  return joint.array() - kernels::log_sum_exp(joint);
}

Label mnb_predict(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  return argmax_negative_ties(mnb_log_joint(model, row));
}

GnbModel gnb_fit(const Dataset& train, double var_smoothing) {
  train.validate();
  if (!(var_smoothing > 0.0)) throw Error(ErrorCode::InvalidHyperparameter, "GNB var_smoothing must be > 0");
  for (int c = 0; c < 2; ++c) {
    if (train.count(class_label(c)) < 2) {
      throw Error(ErrorCode::ClassTooSmall, std::string(to_string(class_label(c))) + " needs at least 2 samples");
    }
  }

  GnbModel m;
  m.log_prior = class_log_priors(train);

  const double n = static_cast<double>(train.size());
  const Eigen::RowVectorXd overall_mean = train.rows.colwise().sum() / n;
  const double max_var =
      train.dims() > 0 ? ((train.rows.rowwise() - overall_mean).array().square().colwise().sum() / n).maxCoeff() : 0.0;
  m.epsilon = max_var > 0.0 ? var_smoothing * max_var : var_smoothing;

  m.mean = Eigen::MatrixXd::Zero(2, train.dims());
  m.variance = Eigen::MatrixXd::Zero(2, train.dims());
  Eigen::Vector2d counts = Eigen::Vector2d::Zero();
  for (Index i = 0; i < train.size(); ++i) {
    const int c = class_index(train.labels[static_cast<std::size_t>(i)]);
    m.mean.row(c) += train.rows.row(i);
    counts(c) += 1.0;
  }
  for (int c = 0; c < 2; ++c) m.mean.row(c) /= counts(c);
  for (Index i = 0; i < train.size(); ++i) {
    const int c = class_index(train.labels[static_cast<std::size_t>(i)]);
    m.variance.row(c) += (train.rows.row(i) - m.mean.row(c)).array().square().matrix();
  }
  for (int c = 0; c < 2; ++c) m.variance.row(c) = (m.variance.row(c) / counts(c)).array() + m.epsilon;
  return m;
}

Eigen::Vector2d gnb_log_joint(const GnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  check_width(model.mean.cols(), row.size());
  Eigen::Vector2d scores;
  for (int c = 0; c < 2; ++c) {
    scores(c) = model.log_prior(c) +
                kernels::gaussian_log_density(row, model.mean.row(c).transpose(), model.variance.row(c).transpose());
  }
  return scores;
}

Label gnb_predict(const GnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  return argmax_negative_ties(gnb_log_joint(model, row));
}

}  // namespace humorkit::ml
