#pragma once

// Scalar-generic numerical kernels shared by the learners and their tests.

#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

namespace humorkit::ml::kernels {

/// Gini impurity of a vector of non-negative class counts.
template <typename Derived>
typename Derived::Scalar gini(const Eigen::MatrixBase<Derived>& counts) {
  using Scalar = typename Derived::Scalar;
  const Scalar total = counts.sum();
  if (total <= Scalar(0)) return Scalar(0);
  return Scalar(1) - (counts.template cast<Scalar>() / total).squaredNorm();
}

/// Sum over features of the univariate normal log density.
template <typename DerivedX, typename DerivedM, typename DerivedV>
typename DerivedX::Scalar gaussian_log_density(const Eigen::MatrixBase<DerivedX>& x,
                                               const Eigen::MatrixBase<DerivedM>& mean,
                                               const Eigen::MatrixBase<DerivedV>& var) {
  using Scalar = typename DerivedX::Scalar;
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  const auto diff = (x - mean).array();
  return (Scalar(-0.5) * (two_pi * var.array()).log() - diff.square() / (Scalar(2) * var.array())).sum();
}

/// Regularized hinge objective (lambda/2)(|w|^2 + b^2) + mean_i max(0, 1 - y_i (w.x_i + b)).
/// The bias is regularized alongside the weights.
template <typename DerivedW, typename DerivedX, typename DerivedY>
typename DerivedW::Scalar hinge_objective(const Eigen::MatrixBase<DerivedW>& w, typename DerivedW::Scalar b,
                                          const Eigen::MatrixBase<DerivedX>& X, const Eigen::MatrixBase<DerivedY>& y,
                                          typename DerivedW::Scalar lambda) {
  using Scalar = typename DerivedW::Scalar;
  const auto margins = (Scalar(1) - (y.array() * ((X * w).array() + b))).max(Scalar(0));
  const Scalar loss = X.rows() > 0 ? margins.sum() / Scalar(X.rows()) : Scalar(0);
  return Scalar(0.5) * lambda * (w.squaredNorm() + b * b) + loss;
}

/// A subgradient of `hinge_objective` (the gradient wherever no margin equals 1).
template <typename DerivedW, typename DerivedX, typename DerivedY>
std::pair<Eigen::Matrix<typename DerivedW::Scalar, Eigen::Dynamic, 1>, typename DerivedW::Scalar> hinge_subgradient(
    const Eigen::MatrixBase<DerivedW>& w, typename DerivedW::Scalar b, const Eigen::MatrixBase<DerivedX>& X,
    const Eigen::MatrixBase<DerivedY>& y, typename DerivedW::Scalar lambda) {
  using Scalar = typename DerivedW::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gw = lambda * w;
  Scalar gb = lambda * b;
  const Scalar inv_n = X.rows() > 0 ? Scalar(1) / Scalar(X.rows()) : Scalar(0);
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const Scalar margin = y(i) * (X.row(i).dot(w.transpose()) + b);
    if (margin < Scalar(1)) {
      gw -= inv_n * y(i) * X.row(i).transpose();
      gb -= inv_n * y(i);
    }
  }
  return {std::move(gw), gb};
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar squared_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).squaredNorm();
}

/// log(sum(exp(v))) without overflow.
template <typename Derived>
typename Derived::Scalar log_sum_exp(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar top = v.maxCoeff();
  if (!std::isfinite(top)) return top;
  return top + std::log((v.array() - top).exp().sum());
}

}  // namespace humorkit::ml::kernels
