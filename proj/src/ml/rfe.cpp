#include "humorkit/ml/rfe.hpp"

#include <algorithm>
#include <numeric>

#include "humorkit/error.hpp"

namespace humorkit::ml {

ImportanceFn svm_importance(SvmParams params) {
  return [params](const Dataset& data) -> Eigen::VectorXd {
    const Standardizer s = Standardizer::fit(data.rows);
    return svm_fit(s.transform(data), params).weights.cwiseAbs();
  };
}

ImportanceFn dt_importance(DtParams params) {
  return [params](const Dataset& data) -> Eigen::VectorXd { return dt_fit(data, params).importance; };
}

std::vector<std::string> RfeResult::ranking() const {
  std::vector<std::string> out = survivors;
  out.insert(out.end(), eliminated.rbegin(), eliminated.rend());
  return out;
}

RfeResult rfe(const ImportanceFn& trainer, const Dataset& data, int n_target) {
  data.validate();
  if (n_target < 1 || n_target > data.dims()) {
    throw Error(ErrorCode::InvalidHyperparameter,
                "n_target must lie in [1, " + std::to_string(data.dims()) + "]");
  }
  std::vector<Index> active(static_cast<std::size_t>(data.dims()));
  std::iota(active.begin(), active.end(), Index{0});

  RfeResult result;
  Eigen::VectorXd importance;
  while (true) {
    importance = trainer(data.select_columns(active));
    if (importance.size() != static_cast<Index>(active.size())) {
      throw Error(ErrorCode::DimensionMismatch, "trainer returned the wrong number of importances");
    }
    if (static_cast<int>(active.size()) == n_target) break;
    Index worst = 0;
    importance.minCoeff(&worst);
    result.eliminated.push_back(data.feature_names[static_cast<std::size_t>(active[static_cast<std::size_t>(worst)])]);
    active.erase(active.begin() + worst);
  }

  std::vector<std::size_t> order(active.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return importance(static_cast<Index>(a)) > importance(static_cast<Index>(b));
  });
  result.survivor_importance.resize(static_cast<Index>(order.size()));
  for (std::size_t r = 0; r < order.size(); ++r) {
    result.survivors.push_back(data.feature_names[static_cast<std::size_t>(active[order[r]])]);
    result.survivor_importance(static_cast<Index>(r)) = importance(static_cast<Index>(order[r]));
  }
  return result;
}

}  // namespace humorkit::ml
