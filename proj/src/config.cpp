#include "humorkit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "humorkit/error.hpp"
#include "humorkit/io.hpp"

namespace humorkit::config {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string default_features() {
  std::string out;
  for (auto name : features::kFeatureNames) {
    if (std::find(features::kOptInFeatures.begin(), features::kOptInFeatures.end(), name) !=
        features::kOptInFeatures.end()) {
      continue;
    }
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

KeyValues make_defaults() {
  KeyValues kv = {
      {"seed", ""},
      {"data_dir", "data"},
      {"tweets", "corpus/tweets.jsonl"},
      {"annotations", "corpus/annotations.jsonl"},
      {"output_dir", "out"},
      {"model_file", ""},
      {"pos_threshold", "0.6"},
      {"neg_threshold", "0.3"},
      {"include_humorous_account_negatives", "false"},
      {"burst_max_gap_ms", "2000"},
      {"burst_min_run", "5"},
      {"features", default_features()},
      {"threads", "0"},
      {"topic_alpha", "1"},
      {"lexicon.adult_slang", "lexicons/adult_slang.txt"},
      {"lexicon.animals", "lexicons/animals.txt"},
      {"lexicon.keywords", "lexicons/keywords.txt"},
      {"lexicon.antonyms", "lexicons/antonyms.tsv"},
      {"lexicon.spanish", "dict/spanish_base.txt"},
      {"lexicon.foreign", "lexicons/foreign_words.txt"},
      {"person.first_pronouns", "lexicons/first_person_pronouns.txt"},
      {"person.first_suffixes", "lexicons/first_person_suffixes.txt"},
      {"person.second_pronouns", "lexicons/second_person_pronouns.txt"},
      {"person.second_suffixes", "lexicons/second_person_suffixes.txt"},
      {"oov.1", "dict/spanish_base.txt"},
      {"oov.2", "dict/spanish_base.txt,dict/web_cache.txt"},
      {"oov.3", "dict/spanish_base.txt,dict/wiktionary.txt"},
      {"oov.4", "dict/wiktionary.txt"},
      {"reference.jokes", "reference/jokes.txt"},
      {"reference.encyclopedia", "reference/encyclopedia.txt"},
      {"model", "svm"},
      {"mnb_alpha", "1"},
      {"gnb_var_smoothing", "1e-9"},
      {"knn_k", "5"},
      {"dt_max_depth", "10"},
      {"dt_min_leaf", "2"},
      {"svm_lambda", "0.0001"},
      {"svm_epochs", "100"},
      {"train_fraction", "0.8"},
      {"serve_host", "127.0.0.1"},
      {"serve_port", "8080"},
      {"static_dir", "static"},
  };
  return kv;
}

const std::string& get(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw Error(ErrorCode::InvalidConfig, "missing key '" + key + "'");
  return it->second;
}

template <typename T>
T number(const KeyValues& kv, const std::string& key) {
  const std::string& s = get(kv, key);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidConfig, key + ": not a number: '" + s + "'");
  }
  return value;
}

bool boolean(const KeyValues& kv, const std::string& key) {
  const std::string& s = get(kv, key);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw Error(ErrorCode::InvalidConfig, key + ": expected true or false, got '" + s + "'");
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const std::string_view item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

const KeyValues& defaults() {
  static const KeyValues kv = make_defaults();
  return kv;
}

KeyValues parse(std::string_view text, std::string_view origin) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw Error(ErrorCode::InvalidConfig, where + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    if (!defaults().count(key)) throw Error(ErrorCode::InvalidConfig, where + ": unknown key '" + key + "'");
    kv[key] = std::string(trim(line.substr(eq + 1)));
  }
  return kv;
}

KeyValues load(const fs::path& path) { return parse(io::read_file(path), path.string()); }

void merge(KeyValues& into, const KeyValues& layer) {
  for (const auto& [k, v] : layer) {
    if (!defaults().count(k)) throw Error(ErrorCode::InvalidConfig, "unknown key '" + k + "'");
    into[k] = v;
  }
}

std::string render(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

RunConfig resolve(const KeyValues& kv) {
  RunConfig cfg;
  cfg.resolved = kv;
  if (get(kv, "seed").empty()) throw Error(ErrorCode::InvalidConfig, "seed is mandatory");
  cfg.seed = number<std::uint64_t>(kv, "seed");

  cfg.data_dir = get(kv, "data_dir");
  auto data_path = [&](const std::string& key) { return cfg.data_dir / get(kv, key); };
  cfg.tweets = data_path("tweets");
  cfg.annotations = data_path("annotations");
  cfg.output_dir = get(kv, "output_dir");
  cfg.model_file = get(kv, "model_file").empty() ? cfg.output_dir / "model.txt" : fs::path(get(kv, "model_file"));

  cfg.aggregation.pos_threshold = number<double>(kv, "pos_threshold");
  cfg.aggregation.neg_threshold = number<double>(kv, "neg_threshold");
  cfg.aggregation.include_humorous_account_negatives = boolean(kv, "include_humorous_account_negatives");
  cfg.aggregation.validate();
  cfg.burst.max_gap_ms = number<std::int64_t>(kv, "burst_max_gap_ms");
  cfg.burst.min_run = number<int>(kv, "burst_min_run");

  auto& f = cfg.features;
  for (auto& name : split_list(get(kv, "features"))) f.enabled.insert(std::move(name));
  f.validate();
  f.adult_slang_lexicon = data_path("lexicon.adult_slang");
  f.animal_lexicon = data_path("lexicon.animals");
  f.keyword_lexicon = data_path("lexicon.keywords");
  f.antonym_pairs = data_path("lexicon.antonyms");
  f.spanish_wordlist = data_path("lexicon.spanish");
  f.foreign_wordlist = data_path("lexicon.foreign");
  f.first_person_pronouns = data_path("person.first_pronouns");
  f.first_person_suffixes = data_path("person.first_suffixes");
  f.second_person_pronouns = data_path("person.second_pronouns");
  f.second_person_suffixes = data_path("person.second_suffixes");
  for (std::size_t s = 0; s < 4; ++s) {
    for (const auto& p : split_list(get(kv, "oov." + std::to_string(s + 1)))) f.oov_stacks[s].push_back(cfg.data_dir / p);
  }
  f.joke_corpus = data_path("reference.jokes");
  f.encyclopedia_corpus = data_path("reference.encyclopedia");
  f.topic_alpha = number<double>(kv, "topic_alpha");
  cfg.threads = number<unsigned>(kv, "threads");

  const auto kind = ml::parse_model_kind(get(kv, "model"));
  if (!kind) throw Error(ErrorCode::InvalidConfig, "model: unknown kind '" + get(kv, "model") + "'");
  cfg.model = *kind;
  cfg.hp.mnb_alpha = number<double>(kv, "mnb_alpha");
  cfg.hp.gnb_var_smoothing = number<double>(kv, "gnb_var_smoothing");
  cfg.hp.knn_k = number<int>(kv, "knn_k");
  cfg.hp.dt.max_depth = number<int>(kv, "dt_max_depth");
  cfg.hp.dt.min_leaf = number<int>(kv, "dt_min_leaf");
  cfg.hp.svm.lambda = number<double>(kv, "svm_lambda");
  cfg.hp.svm.epochs = number<int>(kv, "svm_epochs");
  cfg.hp.svm.seed = cfg.seed;

  cfg.train_fraction = number<double>(kv, "train_fraction");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "train_fraction must lie in (0, 1)");
  }

  cfg.serve_host = get(kv, "serve_host");
  cfg.serve_port = number<int>(kv, "serve_port");
  cfg.static_dir = get(kv, "static_dir").empty() ? fs::path() : data_path("static_dir");
  return cfg;
}

RunConfig build(const fs::path& file, const KeyValues& overrides) {
  KeyValues kv = defaults();
  if (!file.empty()) {
    KeyValues from_file = load(file);
    // A relative data_dir in a config file is relative to that file.
    if (auto it = from_file.find("data_dir"); it != from_file.end() && fs::path(it->second).is_relative()) {
      it->second = (file.parent_path() / it->second).lexically_normal().string();
    }
    merge(kv, from_file);
  }
  if (const char* env = std::getenv("HUMORKIT_DATA_DIR"); env != nullptr && *env != '\0') kv["data_dir"] = env;
  merge(kv, overrides);
  return resolve(kv);
}

}  // namespace humorkit::config
