#include "humorkit/eval.hpp"

#include <cstdio>
#include <json.hpp>

#include "humorkit/error.hpp"
#include "humorkit/text.hpp"

namespace humorkit::eval {

namespace {

std::optional<double> safe_ratio(long num, long den) noexcept {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::vector<std::string> bow_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& tok : text::tokenize(text).tokens) out.push_back(std::move(tok.normalized));
  return out;
}

nlohmann::json metric_json(std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

ConfusionMatrix confusion(const std::vector<Label>& predictions, const std::vector<Label>& gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(predictions.size()) + " predictions for " +
                                               std::to_string(gold.size()) + " gold labels");
  }
  if (gold.empty()) throw Error(ErrorCode::EmptyDataset, "nothing to evaluate");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == Label::Doubtful || predictions[i] == Label::Doubtful) {
      throw Error(ErrorCode::DoubtfulPresent, "doubtful label at position " + std::to_string(i));
    }
    const bool p = predictions[i] == Label::Positive;
    const bool g = gold[i] == Label::Positive;
    if (p && g) ++cm.tp;
    else if (p) ++cm.fp;
    else if (g) ++cm.fn;
    else ++cm.tn;
  }
  return cm;
}

std::optional<double> harmonic_mean(std::optional<double> a, std::optional<double> b) noexcept {
  if (!a || !b || *a + *b == 0.0) return std::nullopt;
  return 2.0 * *a * *b / (*a + *b);
}

MetricsReport metrics(const ConfusionMatrix& cm) noexcept {
  MetricsReport r;
  r.precision = safe_ratio(cm.tp, cm.tp + cm.fp);
  r.recall = safe_ratio(cm.tp, cm.tp + cm.fn);
  r.f1 = harmonic_mean(r.precision, r.recall);
  r.npv = safe_ratio(cm.tn, cm.tn + cm.fn);
  r.tnr = safe_ratio(cm.tn, cm.tn + cm.fp);
  r.neg_f1 = harmonic_mean(r.npv, r.tnr);
  r.accuracy = safe_ratio(cm.tp + cm.tn, cm.total());
  return r;
}

ml::MajorityModel baseline_majority(const ml::Dataset& train) { return ml::majority_fit(train); }

BowMnbModel baseline_bow_mnb(const std::vector<std::string>& train_texts, const std::vector<Label>& train_labels,
                             double alpha) {
  if (train_texts.size() != train_labels.size()) {
    throw Error(ErrorCode::LengthMismatch, "texts and labels differ in length");
  }
  if (train_texts.empty()) throw Error(ErrorCode::EmptyDataset, "bag-of-words baseline needs training texts");
  std::vector<std::vector<std::string>> docs;
  docs.reserve(train_texts.size());
  for (const auto& t : train_texts) docs.push_back(bow_tokens(t));

  BowMnbModel model;
  model.vectorizer = ml::bow_fit(docs);
  ml::Dataset data;
  data.feature_names.resize(static_cast<std::size_t>(model.vectorizer.size()));
  for (const auto& [term, col] : model.vectorizer.vocabulary) data.feature_names[static_cast<std::size_t>(col)] = term;
  data.rows.resize(static_cast<ml::Index>(docs.size()), model.vectorizer.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    data.rows.row(static_cast<ml::Index>(i)) = ml::bow_transform(model.vectorizer, docs[i]).transpose();
  }
  data.labels = train_labels;
  model.mnb = ml::mnb_fit(data, alpha);
  return model;
}

Label predict(const BowMnbModel& model, std::string_view text) {
  return ml::mnb_predict(model.mnb, ml::bow_transform(model.vectorizer, bow_tokens(text)));
}

Eigen::Vector2d log_posterior(const BowMnbModel& model, std::string_view text) {
  return ml::mnb_log_posterior(model.mnb, ml::bow_transform(model.vectorizer, bow_tokens(text)));
}

Evaluation evaluate(const ml::TrainedModel& model, const ml::Dataset& test, std::string name) {
  if (test.size() == 0) throw Error(ErrorCode::EmptyDataset, "empty test set");
  std::vector<Label> predictions;
  predictions.reserve(static_cast<std::size_t>(test.size()));
  for (ml::Index i = 0; i < test.size(); ++i) predictions.push_back(ml::predict(model, test.rows.row(i).transpose()));
  Evaluation e;
  e.model = name.empty() ? std::string(ml::to_string(model.kind())) : std::move(name);
  e.cm = confusion(predictions, test.labels);
  e.metrics = metrics(e.cm);
  return e;
}

Evaluation evaluate(const ml::MajorityModel& model, const std::vector<Label>& gold, std::string name) {
  Evaluation e;
  e.model = std::move(name);
  e.cm = confusion(std::vector<Label>(gold.size(), model.label), gold);
  e.metrics = metrics(e.cm);
  return e;
}

Evaluation evaluate(const BowMnbModel& model, const std::vector<std::string>& texts, const std::vector<Label>& gold,
                    std::string name) {
  std::vector<Label> predictions;
  predictions.reserve(texts.size());
  for (const auto& t : texts) predictions.push_back(predict(model, t));
  Evaluation e;
  e.model = std::move(name);
  e.cm = confusion(predictions, gold);
  e.metrics = metrics(e.cm);
  return e;
}

std::string format_metric(std::optional<double> value) {
  if (!value) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *value);
  return buf;
}

std::string format_table(const std::vector<Evaluation>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %9s %9s %9s %9s %9s %9s %9s\n", "model", "precision", "recall", "f1", "npv",
                "tnr", "neg_f1", "accuracy");
  out += line;
  for (const auto& e : rows) {
    const auto& m = e.metrics;
    std::snprintf(line, sizeof line, "%-10s %9s %9s %9s %9s %9s %9s %9s\n", e.model.c_str(),
                  format_metric(m.precision).c_str(), format_metric(m.recall).c_str(), format_metric(m.f1).c_str(),
                  format_metric(m.npv).c_str(), format_metric(m.tnr).c_str(), format_metric(m.neg_f1).c_str(),
                  format_metric(m.accuracy).c_str());
    out += line;
  }
  return out;
}

namespace {

nlohmann::json evaluation_json(const Evaluation& e) {
  const auto& m = e.metrics;
  return {
      {"model", e.model},
      {"cm", {{"tp", e.cm.tp}, {"fp", e.cm.fp}, {"fn", e.cm.fn}, {"tn", e.cm.tn}}},
      {"metrics",
       {{"precision", metric_json(m.precision)},
        {"recall", metric_json(m.recall)},
        {"f1", metric_json(m.f1)},
        {"npv", metric_json(m.npv)},
        {"tnr", metric_json(m.tnr)},
        {"neg_f1", metric_json(m.neg_f1)},
        {"accuracy", metric_json(m.accuracy)}}},
  };
}

}  // namespace

std::string to_json(const Evaluation& e) { return evaluation_json(e).dump(2) + "\n"; }

std::string to_json(const std::vector<Evaluation>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : rows) arr.push_back(evaluation_json(e));
  return arr.dump(2) + "\n";
}

}  // namespace humorkit::eval
