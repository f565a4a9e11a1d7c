#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "humorkit/ml/dataset.hpp"
#include "humorkit/ml/knn.hpp"
#include "humorkit/ml/naive_bayes.hpp"
#include "humorkit/ml/svm.hpp"
#include "humorkit/ml/tree.hpp"

namespace humorkit::ml {

/// Constant predictor.
struct MajorityModel {
  Label label = Label::Negative;
};

/// Training-majority label, Negative on ties.
MajorityModel majority_fit(const Dataset& train);

enum class ModelKind { Mnb, Gnb, Knn, Dt, Svm, Majority };

std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view s) noexcept;

struct Hyperparameters {
  double mnb_alpha = 1.0;
  double gnb_var_smoothing = 1e-9;
  int knn_k = 5;
  DtParams dt;
  SvmParams svm;
};

/// A fitted classifier plus the feature layout and the input standardization it
/// was trained with. Predictions take raw (unstandardized) feature rows.
struct TrainedModel {
  std::vector<std::string> feature_names;
  std::optional<Standardizer> standardizer;  // set for kNN and SVM
  std::variant<MnbModel, GnbModel, KnnModel, DtModel, SvmModel, MajorityModel> model;

  ModelKind kind() const noexcept;
};

/// Fits `kind` on raw features, standardizing first for kNN and SVM.
TrainedModel train(ModelKind kind, const Dataset& train, const Hyperparameters& hp = {});

Label predict(const TrainedModel& model, const Eigen::Ref<const Eigen::VectorXd>& raw_row);

/// Real-valued confidence for Positive: SVM decision value, Bayes log-odds,
/// kNN/tree positive share, or 1/0 for the constant model.
double score(const TrainedModel& model, const Eigen::Ref<const Eigen::VectorXd>& raw_row);

inline constexpr int kModelFormatVersion = 1;

/// Line-oriented text format; every double is written as an exact hex float.
std::string serialize(const TrainedModel& model);
TrainedModel deserialize(std::string_view text);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace humorkit::ml
