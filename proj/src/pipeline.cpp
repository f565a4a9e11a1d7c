#include "humorkit/pipeline.hpp"

#include "humorkit/error.hpp"

namespace humorkit::pipeline {

BuiltCorpus build_corpus(const config::RunConfig& cfg) {
  BuiltCorpus built;
  built.tweets = corpus::load_tweets(cfg.tweets);
  auto annotations = corpus::load_annotations(cfg.annotations);
  built.raw_annotations = annotations.size();
  built.annotations = corpus::filter_annotations(std::move(annotations), cfg.burst);
  built.labeled = corpus::aggregate_labels(built.tweets, built.annotations, cfg.aggregation);
  return built;
}

corpus::SplitResult split_population(const config::RunConfig& cfg, const BuiltCorpus& built) {
  return corpus::split(corpus::training_population(built.labeled, cfg.aggregation), cfg.train_fraction, cfg.seed);
}

std::vector<features::FeatureVector> extract(const std::vector<corpus::LabeledTweet>& tweets,
                                             const features::FeatureConfig& fcfg,
                                             const features::FeatureResources& res, unsigned threads) {
  std::vector<features::TextItem> items;
  items.reserve(tweets.size());
  for (const auto& t : tweets) items.push_back({t.tweet.id, t.tweet.text});
  return features::extract_many(items, fcfg, res, threads);
}

ml::Dataset featurize(const std::vector<corpus::LabeledTweet>& tweets, const features::FeatureConfig& fcfg,
                      const features::FeatureResources& res, unsigned threads) {
  std::vector<Label> labels;
  labels.reserve(tweets.size());
  for (const auto& t : tweets) labels.push_back(t.label);
  ml::Dataset data = features::to_dataset(extract(tweets, fcfg, res, threads), labels);
  if (tweets.empty()) data.feature_names = fcfg.ordered_names();
  return data;
}

features::FeatureConfig for_model(const features::FeatureConfig& base, const ml::TrainedModel& model) {
  features::FeatureConfig out = base;
  out.enabled = {model.feature_names.begin(), model.feature_names.end()};
  out.validate();
  if (out.ordered_names() != model.feature_names) {
    throw Error(ErrorCode::DimensionMismatch, "model feature order differs from the canonical order");
  }
  return out;
}

std::vector<eval::Evaluation> evaluate_run(const config::RunConfig& cfg, const ml::TrainedModel& model,
                                           const corpus::SplitResult& split) {
  if (split.test.empty()) throw Error(ErrorCode::EmptyDataset, "test split is empty");
  const auto fcfg = for_model(cfg.features, model);
  const auto res = features::FeatureResources::load(fcfg);
  const ml::Dataset test = featurize(split.test, fcfg, res, cfg.threads);

  std::vector<std::string> train_texts;
  std::vector<Label> train_labels;
  for (const auto& t : split.train) {
    train_texts.push_back(t.tweet.text);
    train_labels.push_back(t.label);
  }
  std::vector<std::string> test_texts;
  for (const auto& t : split.test) test_texts.push_back(t.tweet.text);

  ml::Dataset train_labels_only;
  train_labels_only.rows.resize(static_cast<ml::Index>(train_labels.size()), 0);
  train_labels_only.labels = train_labels;

  std::vector<eval::Evaluation> rows;
  rows.push_back(eval::evaluate(model, test));
  rows.push_back(eval::evaluate(eval::baseline_bow_mnb(train_texts, train_labels, cfg.hp.mnb_alpha), test_texts,
                                test.labels, "BL1"));
  rows.push_back(eval::evaluate(eval::baseline_majority(train_labels_only), test.labels, "BL2"));
  return rows;
}

}  // namespace humorkit::pipeline
