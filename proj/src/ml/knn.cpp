#include "humorkit/ml/knn.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "humorkit/error.hpp"
#include "humorkit/ml/kernels.hpp"

namespace humorkit::ml {

KnnModel knn_fit(const Dataset& train, int k) {
  train.validate();
  if (k < 1 || k % 2 == 0) throw Error(ErrorCode::InvalidHyperparameter, "k must be a positive odd integer");
  if (k > train.size()) {
    throw Error(ErrorCode::KTooLarge, "k=" + std::to_string(k) + " exceeds " + std::to_string(train.size()) + " samples");
  }
  return KnnModel{train.rows, train.labels, k};
}

std::vector<Index> knn_neighbors(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  if (row.size() != model.points.cols()) throw Error(ErrorCode::DimensionMismatch, "kNN query width mismatch");
  std::vector<std::pair<double, Index>> dist(static_cast<std::size_t>(model.points.rows()));
  for (Index i = 0; i < model.points.rows(); ++i) {
    dist[static_cast<std::size_t>(i)] = {kernels::squared_distance(model.points.row(i).transpose(), row), i};
  }
  const auto k = static_cast<std::ptrdiff_t>(model.k);
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::ptrdiff_t i = 0; i < k; ++i) out.push_back(dist[static_cast<std::size_t>(i)].second);
  return out;
}

double knn_positive_fraction(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  const auto neighbors = knn_neighbors(model, row);
  const auto positives = std::count_if(neighbors.begin(), neighbors.end(), [&](Index i) {
    return model.labels[static_cast<std::size_t>(i)] == Label::Positive;
  });
  return static_cast<double>(positives) / static_cast<double>(neighbors.size());
}

Label knn_predict(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  return knn_positive_fraction(model, row) > 0.5 ? Label::Positive : Label::Negative;
}

}  // namespace humorkit::ml
