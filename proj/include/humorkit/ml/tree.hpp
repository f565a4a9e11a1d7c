#pragma once

#include <array>
#include <vector>

#include "humorkit/ml/dataset.hpp"

namespace humorkit::ml {

struct DtNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // rows with x[feature] <= threshold go left
  int left = -1;
  int right = -1;
  Label prediction = Label::Negative;
  std::array<int, 2> counts{0, 0};  // Positive, Negative samples reaching the node

  bool is_leaf() const noexcept { return feature < 0; }
};

struct DtParams {
  int max_depth = 10;  // negative = unbounded
  int min_leaf = 2;
};

/// CART classifier grown on weighted Gini impurity. Node 0 is the root.
struct DtModel {
  std::vector<DtNode> nodes;
  DtParams params;
  Eigen::VectorXd importance;  // total impurity decrease per feature, weighted by node share

  int depth() const;
  const DtNode& leaf_for(const Eigen::Ref<const Eigen::VectorXd>& row) const;
};

DtModel dt_fit(const Dataset& train, const DtParams& params = {});
Label dt_predict(const DtModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

/// Share of Positive training samples in the reached leaf.
double dt_positive_fraction(const DtModel& model, const Eigen::Ref<const Eigen::VectorXd>& row);

}  // namespace humorkit::ml
