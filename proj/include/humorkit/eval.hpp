#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "humorkit/label.hpp"
#include "humorkit/ml/bow.hpp"
#include "humorkit/ml/dataset.hpp"
#include "humorkit/ml/model.hpp"
#include "humorkit/ml/naive_bayes.hpp"

namespace humorkit::eval {

/// Positive is the humorous class.
struct ConfusionMatrix {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  long total() const noexcept { return tp + fp + fn + tn; }
  /// Roles of Positive and Negative exchanged.
  ConfusionMatrix swapped() const noexcept { return {tn, fn, fp, tp}; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Throws LengthMismatch on unequal lengths, EmptyDataset on empty input.
ConfusionMatrix confusion(const std::vector<Label>& predictions, const std::vector<Label>& gold);

/// Each metric is empty exactly when its denominator is zero.
struct MetricsReport {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::optional<double> npv;
  std::optional<double> tnr;
  std::optional<double> neg_f1;
  std::optional<double> accuracy;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport metrics(const ConfusionMatrix& cm) noexcept;

/// Harmonic mean; empty if either input is empty or both are 0.
std::optional<double> harmonic_mean(std::optional<double> a, std::optional<double> b) noexcept;

ml::MajorityModel baseline_majority(const ml::Dataset& train);

/// Bag of words over every token (normalized form) feeding a multinomial Bayes.
struct BowMnbModel {
  ml::BowVectorizer vectorizer;
  ml::MnbModel mnb;
};

BowMnbModel baseline_bow_mnb(const std::vector<std::string>& train_texts, const std::vector<Label>& train_labels,
                             double alpha = 1.0);

Label predict(const BowMnbModel& model, std::string_view text);
/// log P(Positive | text), log P(Negative | text).
Eigen::Vector2d log_posterior(const BowMnbModel& model, std::string_view text);

struct Evaluation {
  std::string model;
  ConfusionMatrix cm;
  MetricsReport metrics;
};

Evaluation evaluate(const ml::TrainedModel& model, const ml::Dataset& test, std::string name = {});
Evaluation evaluate(const ml::MajorityModel& model, const std::vector<Label>& gold, std::string name = "BL2");
Evaluation evaluate(const BowMnbModel& model, const std::vector<std::string>& texts, const std::vector<Label>& gold,
                    std::string name = "BL1");

/// Three decimals, "N/A" when undefined.
std::string format_metric(std::optional<double> value);

/// Fixed-width table, one row per evaluation.
std::string format_table(const std::vector<Evaluation>& rows);

/// {"model", "cm": {tp, fp, fn, tn}, "metrics": {...}} with nulls for undefined metrics.
std::string to_json(const Evaluation& e);
std::string to_json(const std::vector<Evaluation>& rows);

}  // namespace humorkit::eval
