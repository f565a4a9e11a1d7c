#pragma once

#include <Eigen/Dense>

#include "humorkit/ml/dataset.hpp"

namespace humorkit::ml {

/// Multinomial naive Bayes over non-negative feature mass. Row 0 of the
/// class-indexed members is Positive, row 1 Negative.
struct MnbModel {
  Eigen::Vector2d log_prior;
  Eigen::MatrixXd log_theta;  // 2 x features
  double alpha = 1.0;
};

MnbModel mnb_fit(const Dataset& train, double alpha = 1.0);

/// log P(c) + sum_f row[f] log theta_{c,f}, for c in {Positive, Negative}.
Eigen::Vector2d mnb_log_joint(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// Normalized log posteriors log P(c | row).
Eigen::Vector2d mnb_log_posterior(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// Ties go to Negative.
Label mnb_predict(const MnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

struct GnbModel {
  Eigen::Vector2d log_prior;
  Eigen::MatrixXd mean;      // 2 x features
  Eigen::MatrixXd variance;  // 2 x features, each >= epsilon
  double epsilon = 0.0;
};

/// epsilon = var_smoothing * (largest per-feature variance over all of `train`),
/// or var_smoothing itself when every feature is constant. Needs >= 2 samples per class.
GnbModel gnb_fit(const Dataset& train, double var_smoothing = 1e-9);

Eigen::Vector2d gnb_log_joint(const GnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);
Label gnb_predict(const GnbModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

}  // namespace humorkit::ml
