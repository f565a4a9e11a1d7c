#include "humorkit/features.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numeric>
#include <mutex>
#include <thread>

#include "humorkit/error.hpp"
#include "humorkit/io.hpp"

namespace humorkit::features {

using text::Token;
using text::TokenizedTweet;
using text::TokenKind;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Non-comment, non-blank lines of a resource file.
std::vector<std::string> resource_lines(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::MissingDictionary, path.string());
  std::vector<std::string> out;
  for (const auto& raw : io::read_lines(path)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(line);
  }
  return out;
}

double ratio(std::size_t hits, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

bool is_dash(const Token& tok) {
  return tok.kind == TokenKind::Punct && (tok.surface == "-" || tok.surface == "–" || tok.surface == "—");
}

bool is_final_punct(const Token& tok) {
  return tok.kind == TokenKind::Punct &&
         (tok.surface == "." || tok.surface == "!" || tok.surface == "?" || tok.surface == "…");
}

// A segment is a question when its closing run of sentence-final marks contains '?'.
bool is_question(const TokenizedTweet& t, const text::TokenRange& seg) {
  for (std::size_t i = seg.end; i > seg.begin; --i) {
    const Token& tok = t.tokens[i - 1];
    if (!is_final_punct(tok)) break;
    if (tok.surface == "?") return true;
  }
  return false;
}

}  // namespace

// ---- resources ------------------------------------------------------------

Lexicon Lexicon::load(const std::filesystem::path& path, std::string name) {
  Lexicon lex = from_entries(name.empty() ? path.stem().string() : std::move(name), resource_lines(path));
  lex.source_path_ = path;
  return lex;
}

Lexicon Lexicon::from_entries(std::string name, const std::vector<std::string>& entries) {
  Lexicon lex;
  lex.name_ = std::move(name);
  for (const auto& e : entries) {
    std::string norm = text::normalize(trim(e));
    if (!norm.empty()) lex.entries_.insert(std::move(norm));
  }
  if (lex.entries_.empty()) throw Error(ErrorCode::InvalidConfig, "lexicon '" + lex.name_ + "' has no entries");
  return lex;
}

AntonymLexicon AntonymLexicon::load(const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& line : resource_lines(path)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::MalformedRecord, path.string() + ": antonym line without a tab: '" + line + "'");
    }
    pairs.emplace_back(std::string(trim(std::string_view(line).substr(0, tab))),
                       std::string(trim(std::string_view(line).substr(tab + 1))));
  }
  return from_pairs(pairs);
}

AntonymLexicon AntonymLexicon::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  AntonymLexicon lex;
  for (const auto& [a, b] : pairs) {
    std::string x = text::normalize(a);
    std::string y = text::normalize(b);
    if (x.empty() || y.empty() || x == y) continue;
    if (y < x) std::swap(x, y);
    lex.pairs_.emplace(std::move(x), std::move(y));
  }
  return lex;
}

bool AntonymLexicon::contains(std::string_view a, std::string_view b) const {
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  return pairs_.count({std::string(a), std::string(b)}) > 0;
}

PersonRules PersonRules::load(const std::filesystem::path& pronouns, const std::filesystem::path& suffixes) {
  return from_lists(resource_lines(pronouns), resource_lines(suffixes));
}

PersonRules PersonRules::from_lists(const std::vector<std::string>& pronouns, const std::vector<std::string>& suffixes) {
  PersonRules rules;
  for (const auto& p : pronouns) rules.pronouns_.insert(text::normalize(p));
  for (const auto& s : suffixes) {
    std::string_view v = trim(s);
    if (!v.empty() && v.front() == '-') v.remove_prefix(1);
    if (!v.empty()) rules.suffixes_.push_back(text::lowercase(v));
  }
  return rules;
}

bool PersonRules::matches(const Token& word) const {
  if (pronouns_.count(word.normalized) > 0) return true;
  if (text::code_point_count(word.surface) < kMinSuffixWordLength) return false;
  const std::string lower = text::lowercase(word.surface);
  return std::any_of(suffixes_.begin(), suffixes_.end(), [&](const std::string& suffix) {
    return lower.size() > suffix.size() && lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0;
  });
}

std::vector<std::string> normalized_words(const TokenizedTweet& t) {
  std::vector<std::string> out;
  for (const auto& tok : t.tokens) {
    if (tok.kind == TokenKind::Word) out.push_back(tok.normalized);
  }
  return out;
}

TopicModel TopicModel::train(const std::vector<std::string>& joke_docs,
                             const std::vector<std::string>& encyclopedia_docs, double alpha) {
  if (joke_docs.empty() || encyclopedia_docs.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "topic model needs documents in both reference collections");
  }
  std::vector<std::vector<std::string>> docs;
  std::vector<Label> labels;
  for (const auto& d : joke_docs) {
    docs.push_back(normalized_words(text::tokenize(d)));
    labels.push_back(Label::Positive);
  }
  for (const auto& d : encyclopedia_docs) {
    docs.push_back(normalized_words(text::tokenize(d)));
    labels.push_back(Label::Negative);
  }

  TopicModel m;
  m.vectorizer_ = ml::bow_fit(docs);
  ml::Dataset data;
  data.feature_names.resize(static_cast<std::size_t>(m.vectorizer_.size()));
  for (const auto& [term, col] : m.vectorizer_.vocabulary) data.feature_names[static_cast<std::size_t>(col)] = term;
  data.rows.resize(static_cast<ml::Index>(docs.size()), m.vectorizer_.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    data.rows.row(static_cast<ml::Index>(i)) = ml::bow_transform(m.vectorizer_, docs[i]).transpose();
  }
  data.labels = std::move(labels);
  m.mnb_ = ml::mnb_fit(data, alpha);
  m.trained_ = true;
  return m;
}

double TopicModel::log_odds(const TokenizedTweet& t) const {
  if (!trained_) throw Error(ErrorCode::UntrainedModel, "topic model has not been trained");
  const Eigen::Vector2d joint = ml::mnb_log_joint(mnb_, ml::bow_transform(vectorizer_, normalized_words(t)));
  return joint(0) - joint(1);
}

// ---- extractors -----------------------------------------------------------

double dict_feature(const TokenizedTweet& t, const Lexicon& lex) {
  std::size_t words = 0;
  std::size_t hits = 0;
  for (const auto& tok : t.tokens) {
    if (tok.kind != TokenKind::Word) continue;
    ++words;
    hits += lex.contains(tok.normalized);
  }
  return words == 0 ? 0.0 : static_cast<double>(hits) / std::sqrt(static_cast<double>(words));
}

double adult_slang(const TokenizedTweet& t, const Lexicon& lex) { return dict_feature(t, lex); }
double animal_presence(const TokenizedTweet& t, const Lexicon& lex) { return dict_feature(t, lex); }
double keywords(const TokenizedTweet& t, const Lexicon& lex) { return dict_feature(t, lex); }

double antonyms(const TokenizedTweet& t, const AntonymLexicon& alex) {
  const auto words = normalized_words(t);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) pairs += alex.contains(words[i], words[j]);
  }
  return ratio(pairs, words.size());
}

double dialog(const TokenizedTweet& t) {
  std::size_t turns = 0;
  for (const auto& seg : t.segments) {
    if (!seg.empty() && is_dash(t.tokens[seg.begin])) ++turns;
  }
  return turns >= 2 ? 1.0 : 0.0;
}

double exclamations(const TokenizedTweet& t) {
  const auto marks = std::count_if(t.tokens.begin(), t.tokens.end(), [](const Token& tok) {
    return tok.kind == TokenKind::Punct && (tok.surface == "!" || tok.surface == "¡");
  });
  return ratio(static_cast<std::size_t>(marks), t.tokens.size());
}

double person_ratio(const TokenizedTweet& t, const PersonRules& rules) {
  std::size_t words = 0;
  std::size_t hits = 0;
  for (const auto& tok : t.tokens) {
    if (tok.kind != TokenKind::Word) continue;
    ++words;
    hits += rules.matches(tok);
  }
  return ratio(hits, words);
}

double first_person(const TokenizedTweet& t, const PersonRules& rules) { return person_ratio(t, rules); }
double second_person(const TokenizedTweet& t, const PersonRules& rules) { return person_ratio(t, rules); }

double hashtags(const TokenizedTweet& t) {
  return static_cast<double>(
      std::count_if(t.tokens.begin(), t.tokens.end(), [](const Token& tok) { return tok.kind == TokenKind::Hashtag; }));
}

double links(const TokenizedTweet& t) {
  return static_cast<double>(
      std::count_if(t.tokens.begin(), t.tokens.end(), [](const Token& tok) { return tok.kind == TokenKind::Url; }));
}

double negation(const TokenizedTweet& t) {
  const auto words = normalized_words(t);
  return ratio(static_cast<std::size_t>(std::count(words.begin(), words.end(), "no")), words.size());
}

double non_spanish(const TokenizedTweet& t, const Lexicon& spanish, const Lexicon& foreign) {
  const auto words = normalized_words(t);
  const auto hits = std::count_if(words.begin(), words.end(),
                                  [&](const std::string& w) { return !spanish.contains(w) && foreign.contains(w); });
  return ratio(static_cast<std::size_t>(hits), words.size());
}

std::array<double, 4> out_of_vocabulary(const TokenizedTweet& t, const std::array<DictionaryStack, 4>& stacks) {
  const auto words = normalized_words(t);
  std::array<double, 4> out{};
  for (std::size_t s = 0; s < stacks.size(); ++s) {
    const auto& stack = stacks[s];
    const auto unknown = std::count_if(words.begin(), words.end(), [&](const std::string& w) {
      return std::none_of(stack.begin(), stack.end(), [&](const Lexicon& lex) { return lex.contains(w); });
    });
    out[s] = ratio(static_cast<std::size_t>(unknown), words.size());
  }
  return out;
}

double question_answer(const TokenizedTweet& t) {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i + 1 < t.segments.size(); ++i) {
    if (is_question(t, t.segments[i]) && !is_question(t, t.segments[i + 1])) ++pairs;
  }
  return static_cast<double>(pairs);
}

double topic_distance(const TokenizedTweet& t, const TopicModel& model) { return model.log_odds(t); }

double uppercase_words(const TokenizedTweet& t) {
  std::size_t words = 0;
  std::size_t upper = 0;
  for (const auto& tok : t.tokens) {
    if (tok.kind != TokenKind::Word) continue;
    ++words;
    upper += text::is_all_uppercase(tok);
  }
  return ratio(upper, words);
}

// ---- configuration --------------------------------------------------------

bool is_known_feature(std::string_view name) noexcept {
  return std::find(kFeatureNames.begin(), kFeatureNames.end(), name) != kFeatureNames.end();
}

FeatureConfig FeatureConfig::defaults(const std::filesystem::path& root) {
  FeatureConfig cfg;
  for (auto name : kFeatureNames) {
    if (std::find(kOptInFeatures.begin(), kOptInFeatures.end(), name) == kOptInFeatures.end()) {
      cfg.enabled.emplace(name);
    }
  }
  cfg.adult_slang_lexicon = root / "lexicons/adult_slang.txt";
  cfg.animal_lexicon = root / "lexicons/animals.txt";
  cfg.keyword_lexicon = root / "lexicons/keywords.txt";
  cfg.antonym_pairs = root / "lexicons/antonyms.tsv";
  cfg.spanish_wordlist = root / "dict/spanish_base.txt";
  cfg.foreign_wordlist = root / "lexicons/foreign_words.txt";
  cfg.first_person_pronouns = root / "lexicons/first_person_pronouns.txt";
  cfg.first_person_suffixes = root / "lexicons/first_person_suffixes.txt";
  cfg.second_person_pronouns = root / "lexicons/second_person_pronouns.txt";
  cfg.second_person_suffixes = root / "lexicons/second_person_suffixes.txt";
  cfg.oov_stacks = {{
      {root / "dict/spanish_base.txt"},
      {root / "dict/spanish_base.txt", root / "dict/web_cache.txt"},
      {root / "dict/spanish_base.txt", root / "dict/wiktionary.txt"},
      {root / "dict/wiktionary.txt"},
  }};
  cfg.joke_corpus = root / "reference/jokes.txt";
  cfg.encyclopedia_corpus = root / "reference/encyclopedia.txt";
  return cfg;
}

std::vector<std::string> FeatureConfig::ordered_names() const {
  std::vector<std::string> out;
  for (auto name : kFeatureNames) {
    if (is_enabled(name)) out.emplace_back(name);
  }
  return out;
}

void FeatureConfig::validate() const {
  for (const auto& name : enabled) {
    if (!is_known_feature(name)) throw Error(ErrorCode::InvalidConfig, "unknown feature '" + name + "'");
  }
}

FeatureResources FeatureResources::load(const FeatureConfig& cfg) {
  cfg.validate();
  FeatureResources res;
  if (cfg.is_enabled("adult_slang")) res.adult_slang = Lexicon::load(cfg.adult_slang_lexicon, "adult_slang");
  if (cfg.is_enabled("animal_presence")) res.animals = Lexicon::load(cfg.animal_lexicon, "animals");
  if (cfg.is_enabled("keywords")) res.keywords = Lexicon::load(cfg.keyword_lexicon, "keywords");
  if (cfg.is_enabled("antonyms")) res.antonyms = AntonymLexicon::load(cfg.antonym_pairs);
  if (cfg.is_enabled("non_spanish")) {
    res.spanish = Lexicon::load(cfg.spanish_wordlist, "spanish");
    res.foreign = Lexicon::load(cfg.foreign_wordlist, "foreign");
  }
  if (cfg.is_enabled("first_person")) {
    res.first_person = PersonRules::load(cfg.first_person_pronouns, cfg.first_person_suffixes);
  }
  if (cfg.is_enabled("second_person")) {
    res.second_person = PersonRules::load(cfg.second_person_pronouns, cfg.second_person_suffixes);
  }
  if (cfg.is_enabled("oov_1") || cfg.is_enabled("oov_2") || cfg.is_enabled("oov_3") || cfg.is_enabled("oov_4")) {
    std::array<DictionaryStack, 4> stacks;
    for (std::size_t s = 0; s < 4; ++s) {
      for (const auto& path : cfg.oov_stacks[s]) stacks[s].push_back(Lexicon::load(path));
    }
    res.oov = std::move(stacks);
  }
  if (cfg.is_enabled("topic_distance")) {
    res.topic = TopicModel::train(resource_lines(cfg.joke_corpus), resource_lines(cfg.encyclopedia_corpus),
                                  cfg.topic_alpha);
  }
  return res;
}

double FeatureVector::value(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values[i];
  }
  throw Error(ErrorCode::InvalidConfig, "feature '" + std::string(name) + "' not in vector");
}

namespace {

template <typename T>
const T& need(const std::optional<T>& resource, std::string_view feature) {
  if (!resource) throw Error(ErrorCode::MissingResource, "resource for '" + std::string(feature) + "' not loaded");
  return *resource;
}

}  // namespace

FeatureVector extract_all(const TokenizedTweet& t, const FeatureConfig& cfg, const FeatureResources& res) {
  FeatureVector fv;
  fv.tweet_id = t.tweet_id;
  std::optional<std::array<double, 4>> oov;
  for (auto name : kFeatureNames) {
    if (!cfg.is_enabled(name)) continue;
    double v = 0.0;
    if (name == "adult_slang") {
      v = adult_slang(t, need(res.adult_slang, name));
    } else if (name == "animal_presence") {
      v = animal_presence(t, need(res.animals, name));
    } else if (name == "antonyms") {
      v = antonyms(t, need(res.antonyms, name));
    } else if (name == "dialog") {
      v = dialog(t);
    } else if (name == "exclamations") {
      v = exclamations(t);
    } else if (name == "first_person") {
      v = first_person(t, need(res.first_person, name));
    } else if (name == "second_person") {
      v = second_person(t, need(res.second_person, name));
    } else if (name == "hashtags") {
      v = hashtags(t);
    } else if (name == "keywords") {
      v = keywords(t, need(res.keywords, name));
    } else if (name == "links") {
      v = links(t);
    } else if (name == "negation") {
      v = negation(t);
    } else if (name == "non_spanish") {
      v = non_spanish(t, need(res.spanish, name), need(res.foreign, name));
    } else if (name.starts_with("oov_")) {
      if (!oov) oov = out_of_vocabulary(t, need(res.oov, name));
      v = (*oov)[static_cast<std::size_t>(name.back() - '1')];
    } else if (name == "question_answer") {
      v = question_answer(t);
    } else if (name == "topic_distance") {
      v = topic_distance(t, need(res.topic, name));
    } else if (name == "uppercase_words") {
      v = uppercase_words(t);
    }
    fv.names.emplace_back(name);
    fv.values.push_back(v);
  }
  return fv;
}

std::vector<FeatureVector> extract_many(const std::vector<TextItem>& items, const FeatureConfig& cfg,
                                        const FeatureResources& res, unsigned threads) {
  std::vector<FeatureVector> out(items.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, items.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        out[i] = extract_all(text::tokenize(items[i].text, items[i].id), cfg, res);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = items.size();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ml::Dataset to_dataset(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels) {
  if (vectors.size() != labels.size()) throw Error(ErrorCode::LengthMismatch, "vectors and labels differ in length");
  ml::Dataset data;
  if (!vectors.empty()) data.feature_names = vectors.front().names;
  data.rows.resize(static_cast<ml::Index>(vectors.size()), static_cast<ml::Index>(data.feature_names.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].names != data.feature_names) {
      throw Error(ErrorCode::DimensionMismatch, "feature vectors disagree on feature names");
    }
    for (std::size_t j = 0; j < vectors[i].values.size(); ++j) {
      data.rows(static_cast<ml::Index>(i), static_cast<ml::Index>(j)) = vectors[i].values[j];
    }
  }
  data.labels = labels;
  data.validate();
  return data;
}

// ---- CSV ------------------------------------------------------------------

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits a CSV document into records honouring quoted fields.
std::vector<std::vector<std::string>> csv_records(std::string_view csv) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < csv.size(); ++i) {
    const char c = csv[i];
    any = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < csv.size() && csv[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < csv.size() && csv[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::MalformedRecord, "unterminated quoted CSV field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::string feature_csv(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels,
                        const std::vector<std::string>& names) {
  if (vectors.size() != labels.size()) throw Error(ErrorCode::LengthMismatch, "vectors and labels differ in length");
  std::string out = "tweet_id";
  for (const auto& n : names) out += "," + csv_field(n);
  out += ",label\n";

  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].tweet_id < vectors[b].tweet_id; });
  for (std::size_t i : order) {
    out += csv_field(vectors[i].tweet_id);
    for (double v : vectors[i].values) out += "," + io::format_double(v);
    out += ",";
    out += to_string(labels[i]);
    out += "\n";
  }
  return out;
}

FeatureTable parse_feature_csv(std::string_view csv) {
  const auto records = csv_records(csv);
  if (records.empty()) throw Error(ErrorCode::MalformedRecord, "feature CSV has no header");
  const auto& header = records.front();
  if (header.size() < 2 || header.front() != "tweet_id" || header.back() != "label") {
    throw Error(ErrorCode::MalformedRecord, "feature CSV header must be tweet_id,<features...>,label");
  }
  FeatureTable table;
  table.data.feature_names.assign(header.begin() + 1, header.end() - 1);
  const auto d = static_cast<ml::Index>(table.data.feature_names.size());
  table.data.rows.resize(static_cast<ml::Index>(records.size() - 1), d);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (static_cast<ml::Index>(rec.size()) != d + 2) {
      throw Error(ErrorCode::MalformedRecord, "CSV line " + std::to_string(r + 1) + " has the wrong field count");
    }
    table.ids.push_back(rec.front());
    for (ml::Index j = 0; j < d; ++j) {
      const std::string& f = rec[static_cast<std::size_t>(j + 1)];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw Error(ErrorCode::MalformedRecord, "CSV line " + std::to_string(r + 1) + ": bad number '" + f + "'");
      }
      table.data.rows(static_cast<ml::Index>(r - 1), j) = v;
    }
    auto label = parse_label(rec.back());
    if (!label || *label == Label::Doubtful) {
      throw Error(ErrorCode::MalformedRecord, "CSV line " + std::to_string(r + 1) + ": bad label '" + rec.back() + "'");
    }
    table.data.labels.push_back(*label);
  }
  table.data.validate();
  return table;
}

}  // namespace humorkit::features
