#pragma once

#include <string>
#include <vector>

#include "humorkit/config.hpp"
#include "humorkit/corpus.hpp"
#include "humorkit/eval.hpp"
#include "humorkit/features.hpp"
#include "humorkit/ml/model.hpp"

namespace humorkit::pipeline {

/// Load, burst-filter and aggregate the configured corpus.
struct BuiltCorpus {
  std::vector<corpus::Tweet> tweets;
  std::size_t raw_annotations = 0;
  std::vector<corpus::Annotation> annotations;  // after the burst filter
  std::vector<corpus::LabeledTweet> labeled;
};

BuiltCorpus build_corpus(const config::RunConfig& cfg);

/// The training population split with the run seed.
corpus::SplitResult split_population(const config::RunConfig& cfg, const BuiltCorpus& built);

std::vector<features::FeatureVector> extract(const std::vector<corpus::LabeledTweet>& tweets,
                                             const features::FeatureConfig& fcfg,
                                             const features::FeatureResources& res, unsigned threads);

ml::Dataset featurize(const std::vector<corpus::LabeledTweet>& tweets, const features::FeatureConfig& fcfg,
                      const features::FeatureResources& res, unsigned threads);

/// Feature config restricted to the columns a model was trained on.
features::FeatureConfig for_model(const features::FeatureConfig& base, const ml::TrainedModel& model);

/// Model row followed by the bag-of-words (BL1) and majority (BL2) baselines,
/// all trained on the train half and scored on the test half.
std::vector<eval::Evaluation> evaluate_run(const config::RunConfig& cfg, const ml::TrainedModel& model,
                                           const corpus::SplitResult& split);

}  // namespace humorkit::pipeline
