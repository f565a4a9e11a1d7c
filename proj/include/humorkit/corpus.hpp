#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "humorkit/label.hpp"

namespace humorkit::corpus {

enum class AccountKind { Humorous, News, Reflections, CuriousFacts };

std::string_view to_string(AccountKind kind) noexcept;
std::optional<AccountKind> parse_account_kind(std::string_view s) noexcept;

struct Tweet {
  std::string id;
  std::string text;
  std::string account;
  AccountKind account_kind = AccountKind::Humorous;
};

/// One crowd vote: a 1..5 star rating, an explicit "not humorous", or a skip.
class Vote {
 public:
  enum class Kind { Star, NotHumor, Skip };

  static Vote star(int stars);  // throws MalformedVote outside [1,5]
  static constexpr Vote not_humor() noexcept { return Vote(Kind::NotHumor, 0); }
  static constexpr Vote skip() noexcept { return Vote(Kind::Skip, 0); }

  /// Wire form: "star1".."star5", "not_humor", "skip".
  static std::optional<Vote> parse(std::string_view s) noexcept;

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr int stars() const noexcept { return stars_; }
  constexpr bool is_humorous() const noexcept { return kind_ == Kind::Star; }
  constexpr bool is_countable() const noexcept { return kind_ != Kind::Skip; }

  /// Dense index: star1..star5 -> 0..4, not_humor -> 5, skip -> 6.
  constexpr std::size_t category() const noexcept {
    switch (kind_) {
      case Kind::Star: return static_cast<std::size_t>(stars_ - 1);
      case Kind::NotHumor: return 5;
      case Kind::Skip: return 6;
    }
    return 6;
  }

  std::string to_string() const;

  friend constexpr bool operator==(Vote, Vote) noexcept = default;

 private:
  constexpr Vote(Kind kind, int stars) noexcept : kind_(kind), stars_(stars) {}

  Kind kind_;
  int stars_;
};

inline constexpr std::size_t kVoteCategories = 7;
std::string_view vote_category_name(std::size_t category) noexcept;

struct Annotation {
  std::string tweet_id;
  std::string session_id;
  std::int64_t timestamp_ms = 0;
  Vote vote = Vote::skip();
};

struct LabeledTweet {
  Tweet tweet;
  Label label = Label::Doubtful;
  std::optional<double> humor_ratio;  // empty when no countable annotations
  int n_annotations = 0;              // Skip votes excluded
};

struct AggregationConfig {
  double pos_threshold = 0.6;
  double neg_threshold = 0.3;
  bool include_humorous_account_negatives = false;

  /// Throws InvalidConfig unless 0 <= neg < pos <= 1.
  void validate() const;
};

struct BurstFilterConfig {
  std::int64_t max_gap_ms = 2000;
  int min_run = 5;
};

// ---- file formats ---------------------------------------------------------

std::vector<Tweet> load_tweets(const std::filesystem::path& path);
std::vector<Annotation> load_annotations(const std::filesystem::path& path);

/// Parsers for a single JSONL record; `line_no` is only used in error messages.
Tweet parse_tweet(std::string_view json_line, std::size_t line_no);
Annotation parse_annotation(std::string_view json_line, std::size_t line_no);

std::string to_json_line(const Annotation& annotation);
std::string to_json_line(const LabeledTweet& labeled);

void write_labeled(const std::filesystem::path& path, const std::vector<LabeledTweet>& labeled);

// ---- operations -----------------------------------------------------------

/// Drops, per session, every maximal run of >= min_run consecutive identical
/// votes whose successive gaps are all < max_gap_ms. Repeats until no such run
/// remains, so the result is a fixed point. Output sorted by (session, time).
std::vector<Annotation> filter_annotations(std::vector<Annotation> annotations,
                                           const BurstFilterConfig& cfg = {});

std::vector<LabeledTweet> aggregate_labels(const std::vector<Tweet>& tweets,
                                           const std::vector<Annotation>& annotations,
                                           const AggregationConfig& cfg = {});

/// Label rule for a humorous-account tweet given its countable vote tally.
Label label_for_ratio(std::optional<double> ratio, const AggregationConfig& cfg) noexcept;

/// The training population: Doubtful removed, humorous-account negatives
/// removed unless the config re-includes them.
std::vector<LabeledTweet> training_population(const std::vector<LabeledTweet>& labeled,
                                              const AggregationConfig& cfg = {});

/// Fleiss' kappa over tweets with exactly `n_raters` countable votes, votes
/// collapsed to humorous / not humorous.
double fleiss_kappa(const std::vector<Annotation>& annotations, int n_raters);

/// Fleiss' kappa from an items x categories count table (each row sums to the rater count).
double fleiss_kappa_from_counts(const std::vector<std::array<int, 2>>& table);

struct SplitResult {
  std::vector<LabeledTweet> train;
  std::vector<LabeledTweet> test;
  std::vector<std::string> warnings;
};

/// Stratified, seeded split; both halves keep input order.
SplitResult split(const std::vector<LabeledTweet>& labeled, double train_fraction, std::uint64_t seed);

struct AnnotationHistogram {
  std::array<std::size_t, kVoteCategories> by_category{};
  /// countable votes per tweet -> number of tweets; only tweets that occur in the input
  std::map<std::size_t, std::size_t> per_tweet;
  std::size_t skips = 0;
  std::size_t total = 0;

  std::size_t count(Vote v) const noexcept { return by_category[v.category()]; }
};

AnnotationHistogram annotation_histogram(const std::vector<Annotation>& annotations);

struct CorpusSummary {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t doubtful = 0;
  std::size_t humorous_account_positive = 0;
  std::size_t humorous_account_negative = 0;
  std::size_t humorous_account_doubtful = 0;
};

CorpusSummary summarize(const std::vector<LabeledTweet>& labeled);

}  // namespace humorkit::corpus
