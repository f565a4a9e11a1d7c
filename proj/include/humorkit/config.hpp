#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "humorkit/corpus.hpp"
#include "humorkit/features.hpp"
#include "humorkit/ml/model.hpp"

namespace humorkit::config {

/// Flat key/value settings as written in a config file.
using KeyValues = std::map<std::string, std::string>;

/// Every recognized key with its default value. `seed` has no default.
const KeyValues& defaults();

/// `key = value` lines; '#' starts a comment; blank lines ignored.
/// Throws InvalidConfig on a line without '=' or an unknown key.
KeyValues parse(std::string_view text, std::string_view origin = "config");
KeyValues load(const std::filesystem::path& path);

/// Later layers win. Unknown keys are rejected.
void merge(KeyValues& into, const KeyValues& layer);

/// Canonical `key = value` rendering, keys sorted.
std::string render(const KeyValues& kv);

struct RunConfig {
  std::uint64_t seed = 0;
  std::filesystem::path data_dir;
  std::filesystem::path tweets;
  std::filesystem::path annotations;
  std::filesystem::path output_dir;
  std::filesystem::path model_file;

  corpus::AggregationConfig aggregation;
  corpus::BurstFilterConfig burst;
  features::FeatureConfig features;
  unsigned threads = 0;

  ml::ModelKind model = ml::ModelKind::Svm;
  ml::Hyperparameters hp;
  double train_fraction = 0.8;

  std::string serve_host;
  int serve_port = 8080;
  std::filesystem::path static_dir;

  KeyValues resolved;  // the settings this config was built from
};

/// Typed view. Relative resource paths are taken under data_dir; output_dir stays
/// relative to the working directory. Throws InvalidConfig on a missing seed or a bad value.
RunConfig resolve(const KeyValues& kv);

/// defaults <- file (if any) <- HUMORKIT_DATA_DIR <- overrides.
RunConfig build(const std::filesystem::path& file, const KeyValues& overrides);

}  // namespace humorkit::config
