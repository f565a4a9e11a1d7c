#pragma once

#include <functional>
#include <string>
#include <vector>

#include "humorkit/ml/dataset.hpp"
#include "humorkit/ml/svm.hpp"
#include "humorkit/ml/tree.hpp"

namespace humorkit::ml {

/// Fits a model on the given data and returns one non-negative importance per column.
using ImportanceFn = std::function<Eigen::VectorXd(const Dataset&)>;

/// |w| of a linear SVM fit on standardized copies of the data.
ImportanceFn svm_importance(SvmParams params = {});

/// Gini impurity decrease of a CART fit.
ImportanceFn dt_importance(DtParams params = {});

struct RfeResult {
  std::vector<std::string> eliminated;  // least important first
  std::vector<std::string> survivors;   // most important first, by the last fit
  Eigen::VectorXd survivor_importance;  // aligned with `survivors`

  /// All features, most important first.
  std::vector<std::string> ranking() const;
};

/// Recursive feature elimination: fit, drop the least important column
/// (lowest current index on ties), repeat until `n_target` remain.
RfeResult rfe(const ImportanceFn& trainer, const Dataset& data, int n_target);

}  // namespace humorkit::ml
