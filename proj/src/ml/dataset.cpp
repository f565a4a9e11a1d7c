#include "humorkit/ml/dataset.hpp"

#include <cmath>

#include "humorkit/error.hpp"

namespace humorkit::ml {

void Dataset::validate() const {
  if (static_cast<Index>(feature_names.size()) != rows.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(feature_names.size()) + " feature names for " +
                                                  std::to_string(rows.cols()) + " columns");
  }
  if (static_cast<Index>(labels.size()) != rows.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(labels.size()) + " labels for " + std::to_string(rows.rows()) + " rows");
  }
  if (!rows.allFinite()) throw Error(ErrorCode::MalformedRecord, "dataset contains a non-finite value");
  for (Label l : labels) {
    if (l == Label::Doubtful) throw Error(ErrorCode::MalformedRecord, "dataset contains a doubtful label");
  }
}

std::size_t Dataset::count(Label label) const noexcept {
  std::size_t n = 0;
  for (Label l : labels) n += l == label;
  return n;
}

Dataset Dataset::select_columns(std::span<const Index> columns) const {
  Dataset out;
  out.rows.resize(rows.rows(), static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.rows.col(static_cast<Index>(j)) = rows.col(columns[j]);
    out.feature_names.push_back(feature_names.at(static_cast<std::size_t>(columns[j])));
  }
  out.labels = labels;
  return out;
}

Dataset Dataset::select_rows(std::span<const Index> selected) const {
  Dataset out;
  out.feature_names = feature_names;
  out.rows.resize(static_cast<Index>(selected.size()), rows.cols());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    out.rows.row(static_cast<Index>(i)) = rows.row(selected[i]);
    out.labels.push_back(labels.at(static_cast<std::size_t>(selected[i])));
  }
  return out;
}

Standardizer Standardizer::fit(const RowMatrix& rows) {
  if (rows.rows() == 0) throw Error(ErrorCode::EmptyDataset, "cannot fit a standardizer on zero rows");
  Standardizer s;
  const double n = static_cast<double>(rows.rows());
  s.mean = rows.colwise().sum().transpose() / n;
  s.scale.resize(rows.cols());
  s.zero_variance.assign(static_cast<std::size_t>(rows.cols()), false);
  for (Index j = 0; j < rows.cols(); ++j) {
    const double var = (rows.col(j).array() - s.mean(j)).square().sum() / n;
    if (var > 0.0) {
      s.scale(j) = std::sqrt(var);
    } else {
      s.scale(j) = 1.0;
      s.zero_variance[static_cast<std::size_t>(j)] = true;
    }
  }
  return s;
}

RowMatrix Standardizer::transform(const RowMatrix& rows) const {
  if (rows.cols() != mean.size()) throw Error(ErrorCode::DimensionMismatch, "standardizer width mismatch");
  RowMatrix out = (rows.rowwise() - mean.transpose()).array().rowwise() / scale.transpose().array();
  return out;
}

Eigen::VectorXd Standardizer::transform(const Eigen::Ref<const Eigen::VectorXd>& row) const {
  if (row.size() != mean.size()) throw Error(ErrorCode::DimensionMismatch, "standardizer width mismatch");
  return ((row - mean).array() / scale.array()).matrix();
}

Dataset Standardizer::transform(const Dataset& data) const {
  Dataset out = data;
  out.rows = transform(data.rows);
  return out;
}

}  // namespace humorkit::ml
