#include "humorkit/ml/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "humorkit/error.hpp"
#include "humorkit/ml/kernels.hpp"

namespace humorkit::ml {

namespace {

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double weighted_impurity = 0.0;  // (nL giniL + nR giniR) / n
};

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const DtParams& params) : data_(data), params_(params) {
    importance_ = Eigen::VectorXd::Zero(data.dims());
  }

  DtModel build() {
    std::vector<Index> all(static_cast<std::size_t>(data_.size()));
    std::iota(all.begin(), all.end(), Index{0});
    grow(all, 0);
    DtModel model;
    model.nodes = std::move(nodes_);
    model.params = params_;
    model.importance = importance_;
    return model;
  }

 private:
  static double gini_of(const std::array<int, 2>& counts) {
    return kernels::gini(Eigen::Vector2d(counts[0], counts[1]));
  }

  std::array<int, 2> count(const std::vector<Index>& samples) const {
    std::array<int, 2> c{0, 0};
    for (Index i : samples) ++c[static_cast<std::size_t>(class_index(data_.labels[static_cast<std::size_t>(i)]))];
    return c;
  }

  // Best split by weighted Gini; features scanned in index order and
  // thresholds in ascending order, replacing only on strict improvement.
  std::optional<Split> best_split(const std::vector<Index>& samples) const {
    const auto n = static_cast<int>(samples.size());
    const int min_leaf = std::max(1, params_.min_leaf);
    std::optional<Split> best;
    std::vector<Index> order = samples;
    for (Index f = 0; f < data_.dims(); ++f) {
      std::stable_sort(order.begin(), order.end(),
                       [&](Index a, Index b) { return data_.rows(a, f) < data_.rows(b, f); });
      std::array<int, 2> left{0, 0};
      std::array<int, 2> total = count(order);
      for (int i = 1; i < n; ++i) {
        const Index prev = order[static_cast<std::size_t>(i - 1)];
        ++left[static_cast<std::size_t>(class_index(data_.labels[static_cast<std::size_t>(prev)]))];
        const double lo = data_.rows(prev, f);
        const double hi = data_.rows(order[static_cast<std::size_t>(i)], f);
        if (!(lo < hi)) continue;
        if (i < min_leaf || n - i < min_leaf) continue;
        double threshold = lo + (hi - lo) / 2.0;
        if (!(threshold < hi)) threshold = lo;
        const std::array<int, 2> right{total[0] - left[0], total[1] - left[1]};
        const double impurity = (i * gini_of(left) + (n - i) * gini_of(right)) / n;
        if (!best || impurity < best->weighted_impurity) {
          best = Split{static_cast<int>(f), threshold, impurity};
        }
      }
    }
    return best;
  }

  int grow(const std::vector<Index>& samples, int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    DtNode node;
    node.counts = count(samples);
    node.prediction = node.counts[0] > node.counts[1] ? Label::Positive : Label::Negative;

    const bool pure = node.counts[0] == 0 || node.counts[1] == 0;
    const bool depth_reached = params_.max_depth >= 0 && depth >= params_.max_depth;
    std::optional<Split> split;
    if (!pure && !depth_reached) split = best_split(samples);
    if (!split) {
      nodes_[static_cast<std::size_t>(id)] = node;
      return id;
    }

    std::vector<Index> left;
    std::vector<Index> right;
    for (Index i : samples) {
      (data_.rows(i, split->feature) <= split->threshold ? left : right).push_back(i);
    }
    const double share = static_cast<double>(samples.size()) / static_cast<double>(data_.size());
    importance_(split->feature) += share * (gini_of(node.counts) - split->weighted_impurity);

    node.feature = split->feature;
    node.threshold = split->threshold;
    nodes_[static_cast<std::size_t>(id)] = node;
    const int l = grow(left, depth + 1);
    const int r = grow(right, depth + 1);
    nodes_[static_cast<std::size_t>(id)].left = l;
    nodes_[static_cast<std::size_t>(id)].right = r;
    return id;
  }

  const Dataset& data_;
  DtParams params_;
  std::vector<DtNode> nodes_;
  Eigen::VectorXd importance_;
};

}  // namespace

int DtModel::depth() const {
  std::function<int(int)> walk = [&](int id) -> int {
    const DtNode& n = nodes.at(static_cast<std::size_t>(id));
    if (n.is_leaf()) return 0;
    return 1 + std::max(walk(n.left), walk(n.right));
  };
  return nodes.empty() ? 0 : walk(0);
}

const DtNode& DtModel::leaf_for(const Eigen::Ref<const Eigen::VectorXd>& row) const {
  if (nodes.empty()) throw Error(ErrorCode::UntrainedModel, "decision tree has no nodes");
  const DtNode* node = &nodes.front();
  while (!node->is_leaf()) {
    if (node->feature >= row.size()) throw Error(ErrorCode::DimensionMismatch, "row too short for tree");
    const int next = row(node->feature) <= node->threshold ? node->left : node->right;
    node = &nodes.at(static_cast<std::size_t>(next));
  }
  return *node;
}

DtModel dt_fit(const Dataset& train, const DtParams& params) {
  train.validate();
  if (train.size() == 0) throw Error(ErrorCode::EmptyDataset, "decision tree needs training rows");
  if (params.min_leaf < 1) throw Error(ErrorCode::InvalidHyperparameter, "min_leaf must be >= 1");
  return TreeBuilder(train, params).build();
}

Label dt_predict(const DtModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  return model.leaf_for(row).prediction;
}

double dt_positive_fraction(const DtModel& model, const Eigen::Ref<const Eigen::VectorXd>& row) {
  const DtNode& leaf = model.leaf_for(row);
  const int total = leaf.counts[0] + leaf.counts[1];
  return total > 0 ? static_cast<double>(leaf.counts[0]) / total : 0.0;
}

}  // namespace humorkit::ml
