#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "humorkit/label.hpp"

namespace humorkit::ml {

/// Samples are stored row-major so a sample is a contiguous vector.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

/// Row in class-indexed arrays: 0 = Positive, 1 = Negative.
constexpr int class_index(Label label) noexcept { return label == Label::Positive ? 0 : 1; }
constexpr Label class_label(int index) noexcept { return index == 0 ? Label::Positive : Label::Negative; }

struct Dataset {
  std::vector<std::string> feature_names;
  RowMatrix rows;
  std::vector<Label> labels;

  Index size() const noexcept { return rows.rows(); }
  Index dims() const noexcept { return rows.cols(); }

  /// DimensionMismatch when names/rows/labels disagree; MalformedRecord for a
  /// non-finite value or a Doubtful label.
  void validate() const;

  std::size_t count(Label label) const noexcept;

  /// Columns in the given order.
  Dataset select_columns(std::span<const Index> columns) const;
  Dataset select_rows(std::span<const Index> rows) const;
};

/// Per-feature affine map to zero mean / unit population variance, fit on training data.
struct Standardizer {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;            // always > 0
  std::vector<bool> zero_variance;  // columns whose scale was forced to 1

  static Standardizer fit(const RowMatrix& rows);

  RowMatrix transform(const RowMatrix& rows) const;
  Eigen::VectorXd transform(const Eigen::Ref<const Eigen::VectorXd>& row) const;
  Dataset transform(const Dataset& data) const;
};

}  // namespace humorkit::ml
