#pragma once

#include <vector>

#include "humorkit/ml/dataset.hpp"

namespace humorkit::ml {

/// Stores (already standardized) training points; prediction is a majority
/// vote over the k nearest by Euclidean distance.
struct KnnModel {
  RowMatrix points;
  std::vector<Label> labels;
  int k = 5;
};

/// k must be odd and <= the number of samples.
KnnModel knn_fit(const Dataset& train, int k = 5);

/// Indices of the k nearest training rows, nearest first; equal distances
/// resolve to the lower row index.
std::vector<Index> knn_neighbors(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// Share of Positive labels among the k nearest.
double knn_positive_fraction(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

Label knn_predict(const KnnModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

}  // namespace humorkit::ml
