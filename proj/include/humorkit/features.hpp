#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "humorkit/label.hpp"
#include "humorkit/ml/bow.hpp"
#include "humorkit/ml/dataset.hpp"
#include "humorkit/ml/naive_bayes.hpp"
#include "humorkit/text.hpp"

namespace humorkit::features {

/// Set of normalized word forms loaded from a one-entry-per-line file.
class Lexicon {
 public:
  /// Lines are trimmed, '#' starts a comment, entries are normalized on load.
  /// Throws MissingDictionary if the file is absent, InvalidConfig if it has no entries.
  static Lexicon load(const std::filesystem::path& path, std::string name = {});
  static Lexicon from_entries(std::string name, const std::vector<std::string>& entries);

  bool contains(std::string_view normalized) const { return entries_.count(std::string(normalized)) > 0; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::filesystem::path& source_path() const noexcept { return source_path_; }

 private:
  std::string name_;
  std::unordered_set<std::string> entries_;
  std::filesystem::path source_path_;
};

/// Unordered antonym pairs, stored with the smaller word first.
class AntonymLexicon {
 public:
  /// One tab-separated pair per line; '#' comments.
  static AntonymLexicon load(const std::filesystem::path& path);
  static AntonymLexicon from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

  bool contains(std::string_view a, std::string_view b) const;
  std::size_t size() const noexcept { return pairs_.size(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// Grammatical-person heuristic: pronoun/clitic list plus verb-suffix table.
class PersonRules {
 public:
  /// Suffixes are matched against the lowercased (accent-preserving) surface.
  static PersonRules load(const std::filesystem::path& pronouns, const std::filesystem::path& suffixes);
  static PersonRules from_lists(const std::vector<std::string>& pronouns, const std::vector<std::string>& suffixes);

  bool matches(const text::Token& word) const;

  static constexpr std::size_t kMinSuffixWordLength = 4;

 private:
  std::unordered_set<std::string> pronouns_;
  std::vector<std::string> suffixes_;
};

/// Word-list providers consulted together; a word is known if any provider has it.
using DictionaryStack = std::vector<Lexicon>;

/// Two-class bag-of-words multinomial Bayes: joke documents vs encyclopedia sentences.
class TopicModel {
 public:
  TopicModel() = default;

  static TopicModel train(const std::vector<std::string>& joke_docs, const std::vector<std::string>& encyclopedia_docs,
                          double alpha = 1.0);

  /// log P(joke | text) - log P(encyclopedia | text). Throws UntrainedModel on a default-constructed model.
  double log_odds(const text::TokenizedTweet& t) const;

  bool trained() const noexcept { return trained_; }
  const ml::BowVectorizer& vectorizer() const noexcept { return vectorizer_; }
  const ml::MnbModel& mnb() const noexcept { return mnb_; }

 private:
  ml::BowVectorizer vectorizer_;
  ml::MnbModel mnb_;
  bool trained_ = false;
};

/// Normalized word forms of the word tokens.
std::vector<std::string> normalized_words(const text::TokenizedTweet& t);

// ---- extractors -----------------------------------------------------------

/// |words ∩ lexicon| (multiset) / sqrt(#words); 0 without words.
double dict_feature(const text::TokenizedTweet& t, const Lexicon& lex);
double adult_slang(const text::TokenizedTweet& t, const Lexicon& lex);
double animal_presence(const text::TokenizedTweet& t, const Lexicon& lex);
double keywords(const text::TokenizedTweet& t, const Lexicon& lex);

/// Antonym position pairs (i < j) / #words.
double antonyms(const text::TokenizedTweet& t, const AntonymLexicon& alex);

/// 1 when at least two segments open with a dash marker (-, – or —).
double dialog(const text::TokenizedTweet& t);

/// '!' and '¡' tokens over all tokens.
double exclamations(const text::TokenizedTweet& t);

double person_ratio(const text::TokenizedTweet& t, const PersonRules& rules);
double first_person(const text::TokenizedTweet& t, const PersonRules& rules);
double second_person(const text::TokenizedTweet& t, const PersonRules& rules);

/// Absolute counts.
double hashtags(const text::TokenizedTweet& t);
double links(const text::TokenizedTweet& t);

double negation(const text::TokenizedTweet& t);
double non_spanish(const text::TokenizedTweet& t, const Lexicon& spanish, const Lexicon& foreign);

/// Per stack: words found in none of its providers / #words.
std::array<double, 4> out_of_vocabulary(const text::TokenizedTweet& t, const std::array<DictionaryStack, 4>& stacks);

/// Adjacent (question, non-question) segment pairs.
double question_answer(const text::TokenizedTweet& t);

double topic_distance(const text::TokenizedTweet& t, const TopicModel& model);
double uppercase_words(const text::TokenizedTweet& t);

// ---- configuration and the full vector -----------------------------------

/// Every known feature in output order.
inline constexpr std::array<std::string_view, 19> kFeatureNames = {
    "adult_slang", "animal_presence", "antonyms", "dialog",          "exclamations",   "first_person",
    "second_person", "hashtags",      "keywords", "links",           "negation",       "non_spanish",
    "oov_1",       "oov_2",           "oov_3",    "oov_4",           "question_answer", "topic_distance",
    "uppercase_words",
};

/// Disabled unless asked for: the three removed by feature elimination.
inline constexpr std::array<std::string_view, 3> kOptInFeatures = {"antonyms", "negation", "non_spanish"};

bool is_known_feature(std::string_view name) noexcept;

struct FeatureConfig {
  std::set<std::string> enabled;

  std::filesystem::path adult_slang_lexicon;
  std::filesystem::path animal_lexicon;
  std::filesystem::path keyword_lexicon;
  std::filesystem::path antonym_pairs;
  std::filesystem::path spanish_wordlist;
  std::filesystem::path foreign_wordlist;
  std::filesystem::path first_person_pronouns;
  std::filesystem::path first_person_suffixes;
  std::filesystem::path second_person_pronouns;
  std::filesystem::path second_person_suffixes;
  std::array<std::vector<std::filesystem::path>, 4> oov_stacks;
  std::filesystem::path joke_corpus;
  std::filesystem::path encyclopedia_corpus;
  double topic_alpha = 1.0;

  /// Default feature set and the bundled resource layout under `data_root`.
  static FeatureConfig defaults(const std::filesystem::path& data_root);

  bool is_enabled(std::string_view name) const { return enabled.count(std::string(name)) > 0; }

  /// Enabled names in the canonical order of kFeatureNames.
  std::vector<std::string> ordered_names() const;

  /// Throws InvalidConfig on an unknown feature name.
  void validate() const;
};

/// Loaded, immutable resources. Only what the enabled features need is populated.
struct FeatureResources {
  std::optional<Lexicon> adult_slang;
  std::optional<Lexicon> animals;
  std::optional<Lexicon> keywords;
  std::optional<AntonymLexicon> antonyms;
  std::optional<Lexicon> spanish;
  std::optional<Lexicon> foreign;
  std::optional<PersonRules> first_person;
  std::optional<PersonRules> second_person;
  std::optional<std::array<DictionaryStack, 4>> oov;
  std::optional<TopicModel> topic;

  static FeatureResources load(const FeatureConfig& cfg);
};

struct FeatureVector {
  std::string tweet_id;
  std::vector<std::string> names;
  std::vector<double> values;

  /// Throws InvalidConfig for an absent name.
  double value(std::string_view name) const;
};

/// One value per enabled feature, in canonical order. Throws MissingResource if
/// an enabled feature's resource was not loaded.
FeatureVector extract_all(const text::TokenizedTweet& t, const FeatureConfig& cfg, const FeatureResources& res);

struct TextItem {
  std::string id;
  std::string text;
};

/// Tokenizes and extracts each item; output order matches input order. Work is
/// spread over `threads` workers (0 = hardware concurrency).
std::vector<FeatureVector> extract_many(const std::vector<TextItem>& items, const FeatureConfig& cfg,
                                        const FeatureResources& res, unsigned threads = 0);

ml::Dataset to_dataset(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels);

/// CSV `tweet_id,<features...>,label`, rows sorted by tweet id.
std::string feature_csv(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels,
                        const std::vector<std::string>& names);

struct FeatureTable {
  std::vector<std::string> ids;
  ml::Dataset data;
};

FeatureTable parse_feature_csv(std::string_view csv);

}  // namespace humorkit::features
