#include "humorkit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "humorkit/error.hpp"
#include "humorkit/io.hpp"
#include "humorkit/random.hpp"

namespace humorkit::corpus {

using nlohmann::json;

std::string_view to_string(AccountKind kind) noexcept {
  switch (kind) {
    case AccountKind::Humorous: return "humorous";
    case AccountKind::News: return "news";
    case AccountKind::Reflections: return "reflections";
    case AccountKind::CuriousFacts: return "curious_facts";
  }
  return "humorous";
}

std::optional<AccountKind> parse_account_kind(std::string_view s) noexcept {
  if (s == "humorous") return AccountKind::Humorous;
  if (s == "news") return AccountKind::News;
  if (s == "reflections") return AccountKind::Reflections;
  if (s == "curious_facts") return AccountKind::CuriousFacts;
  return std::nullopt;
}

Vote Vote::star(int stars) {
  if (stars < 1 || stars > 5) {
    throw Error(ErrorCode::MalformedVote, "star value " + std::to_string(stars) + " outside [1,5]");
  }
  return Vote(Kind::Star, stars);
}

std::optional<Vote> Vote::parse(std::string_view s) noexcept {
  if (s == "not_humor") return not_humor();
  if (s == "skip") return skip();
  if (s.size() == 5 && s.substr(0, 4) == "star" && s[4] >= '1' && s[4] <= '5') {
    return Vote(Kind::Star, s[4] - '0');
  }
  return std::nullopt;
}

std::string Vote::to_string() const { return std::string(vote_category_name(category())); }

std::string_view vote_category_name(std::size_t category) noexcept {
  static constexpr std::array<std::string_view, kVoteCategories> names = {
      "star1", "star2", "star3", "star4", "star5", "not_humor", "skip"};
  return category < names.size() ? names[category] : std::string_view("skip");
}

void AggregationConfig::validate() const {
  if (!(neg_threshold >= 0.0 && neg_threshold < pos_threshold && pos_threshold <= 1.0)) {
    std::ostringstream msg;
    msg << "thresholds must satisfy 0 <= neg < pos <= 1 (got neg=" << neg_threshold
        << ", pos=" << pos_threshold << ")";
    throw Error(ErrorCode::InvalidConfig, msg.str());
  }
}

// ---- parsing --------------------------------------------------------------

namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(line_no) + ": " + what);
}

json parse_object(std::string_view line, std::size_t line_no) {
  json j = json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) malformed(line_no, "not a JSON object");
  return j;
}

std::string string_field(const json& j, const char* key, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) malformed(line_no, std::string("missing string field '") + key + "'");
  return it->get<std::string>();
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Tweet parse_tweet(std::string_view json_line, std::size_t line_no) {
  const json j = parse_object(json_line, line_no);
  Tweet t;
  t.id = string_field(j, "id", line_no);
  t.text = string_field(j, "text", line_no);
  t.account = string_field(j, "account", line_no);
  const std::string kind = string_field(j, "account_kind", line_no);
  auto parsed = parse_account_kind(kind);
  if (!parsed) malformed(line_no, "unknown account_kind '" + kind + "'");
  t.account_kind = *parsed;
  if (t.id.empty()) malformed(line_no, "empty id");
  if (t.text.empty()) malformed(line_no, "empty text");
  return t;
}

Annotation parse_annotation(std::string_view json_line, std::size_t line_no) {
  const json j = parse_object(json_line, line_no);
  Annotation a;
  a.tweet_id = string_field(j, "tweet_id", line_no);
  a.session_id = string_field(j, "session_id", line_no);
  auto ts = j.find("timestamp_ms");
  if (ts == j.end() || !ts->is_number_integer()) malformed(line_no, "missing integer field 'timestamp_ms'");
  a.timestamp_ms = ts->get<std::int64_t>();
  if (a.timestamp_ms < 0) malformed(line_no, "negative timestamp");
  const std::string vote = string_field(j, "vote", line_no);
  auto parsed = Vote::parse(vote);
  if (!parsed) malformed(line_no, "unknown vote '" + vote + "'");
  a.vote = *parsed;
  return a;
}

std::vector<Tweet> load_tweets(const std::filesystem::path& path) {
  const auto lines = io::read_lines(path);
  std::vector<Tweet> tweets;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    Tweet t = parse_tweet(lines[i], i + 1);
    auto [it, inserted] = seen.emplace(t.id, i + 1);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateId, "id '" + t.id + "' on line " + std::to_string(i + 1) +
                                              " already defined on line " + std::to_string(it->second));
    }
    tweets.push_back(std::move(t));
  }
  return tweets;
}

std::vector<Annotation> load_annotations(const std::filesystem::path& path) {
  const auto lines = io::read_lines(path);
  std::vector<Annotation> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    out.push_back(parse_annotation(lines[i], i + 1));
  }
  return out;
}

std::string to_json_line(const Annotation& a) {
  json j;
  j["tweet_id"] = a.tweet_id;
  j["session_id"] = a.session_id;
  j["timestamp_ms"] = a.timestamp_ms;
  j["vote"] = a.vote.to_string();
  return j.dump();
}

std::string to_json_line(const LabeledTweet& l) {
  // nlohmann's default object is key-sorted, which keeps output stable.
  json j;
  j["id"] = l.tweet.id;
  j["text"] = l.tweet.text;
  j["account"] = l.tweet.account;
  j["account_kind"] = std::string(to_string(l.tweet.account_kind));
  j["label"] = std::string(humorkit::to_string(l.label));
  j["humor_ratio"] = l.humor_ratio ? json(*l.humor_ratio) : json(nullptr);
  j["n_annotations"] = l.n_annotations;
  return j.dump();
}

void write_labeled(const std::filesystem::path& path, const std::vector<LabeledTweet>& labeled) {
  std::string out;
  for (const auto& l : labeled) {
    out += to_json_line(l);
    out += '\n';
  }
  io::atomic_write(path, out);
}

// ---- burst filter ---------------------------------------------------------

namespace {

// One pass over a time-ordered session; returns true if anything was removed.
bool remove_bursts(std::vector<Annotation>& session, const BurstFilterConfig& cfg) {
  std::vector<bool> drop(session.size(), false);
  bool any = false;
  std::size_t start = 0;
  while (start < session.size()) {
    std::size_t end = start + 1;
    while (end < session.size() && session[end].vote == session[start].vote &&
           session[end].timestamp_ms - session[end - 1].timestamp_ms < cfg.max_gap_ms) {
      ++end;
    }
    if (end - start >= static_cast<std::size_t>(cfg.min_run)) {
      std::fill(drop.begin() + static_cast<std::ptrdiff_t>(start), drop.begin() + static_cast<std::ptrdiff_t>(end), true);
      any = true;
    }
    start = end;
  }
  if (any) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < session.size(); ++r) {
      if (drop[r]) continue;
      if (w != r) session[w] = std::move(session[r]);
      ++w;
    }
    session.resize(w);
  }
  return any;
}

}  // namespace

std::vector<Annotation> filter_annotations(std::vector<Annotation> annotations, const BurstFilterConfig& cfg) {
  if (cfg.max_gap_ms <= 0 || cfg.min_run < 2) {
    throw Error(ErrorCode::InvalidConfig, "burst filter needs max_gap_ms > 0 and min_run >= 2");
  }
  std::stable_sort(annotations.begin(), annotations.end(), [](const Annotation& a, const Annotation& b) {
    if (a.session_id != b.session_id) return a.session_id < b.session_id;
    return a.timestamp_ms < b.timestamp_ms;
  });

  std::vector<Annotation> out;
  out.reserve(annotations.size());
  auto it = annotations.begin();
  while (it != annotations.end()) {
    auto session_end = std::find_if(it, annotations.end(),
                                    [&](const Annotation& a) { return a.session_id != it->session_id; });
    std::vector<Annotation> session(std::make_move_iterator(it), std::make_move_iterator(session_end));
    while (remove_bursts(session, cfg)) {
    }
    std::move(session.begin(), session.end(), std::back_inserter(out));
    it = session_end;
  }
  return out;
}

// ---- aggregation ----------------------------------------------------------

Label label_for_ratio(std::optional<double> ratio, const AggregationConfig& cfg) noexcept {
  if (!ratio) return Label::Doubtful;
  if (*ratio >= cfg.pos_threshold) return Label::Positive;
  if (*ratio <= cfg.neg_threshold) return Label::Negative;
  return Label::Doubtful;
}

std::vector<LabeledTweet> aggregate_labels(const std::vector<Tweet>& tweets,
                                           const std::vector<Annotation>& annotations,
                                           const AggregationConfig& cfg) {
  cfg.validate();
  struct Tally {
    int humorous = 0;
    int not_humor = 0;
  };
  std::unordered_map<std::string, Tally> tallies;
  tallies.reserve(tweets.size());
  for (const auto& t : tweets) tallies.emplace(t.id, Tally{});

  for (const auto& a : annotations) {
    auto it = tallies.find(a.tweet_id);
    if (it == tallies.end()) throw Error(ErrorCode::UnknownTweetId, "annotation references '" + a.tweet_id + "'");
    if (a.vote.is_humorous()) {
      ++it->second.humorous;
    } else if (a.vote.kind() == Vote::Kind::NotHumor) {
      ++it->second.not_humor;
    }
  }

  std::vector<LabeledTweet> out;
  out.reserve(tweets.size());
  for (const auto& t : tweets) {
    const Tally& tally = tallies.at(t.id);
    LabeledTweet l;
    l.tweet = t;
    l.n_annotations = tally.humorous + tally.not_humor;
    if (l.n_annotations > 0) {
      l.humor_ratio = static_cast<double>(tally.humorous) / static_cast<double>(l.n_annotations);
    }
    l.label = t.account_kind == AccountKind::Humorous ? label_for_ratio(l.humor_ratio, cfg) : Label::Negative;
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<LabeledTweet> training_population(const std::vector<LabeledTweet>& labeled,
                                              const AggregationConfig& cfg) {
  std::vector<LabeledTweet> out;
  for (const auto& l : labeled) {
    if (l.label == Label::Doubtful) continue;
    if (l.label == Label::Negative && l.tweet.account_kind == AccountKind::Humorous &&
        !cfg.include_humorous_account_negatives) {
      continue;
    }
    out.push_back(l);
  }
  return out;
}

CorpusSummary summarize(const std::vector<LabeledTweet>& labeled) {
  CorpusSummary s;
  for (const auto& l : labeled) {
    const bool humorous = l.tweet.account_kind == AccountKind::Humorous;
    switch (l.label) {
      case Label::Positive:
        ++s.positive;
        if (humorous) ++s.humorous_account_positive;
        break;
      case Label::Negative:
        ++s.negative;
        if (humorous) ++s.humorous_account_negative;
        break;
      case Label::Doubtful:
        ++s.doubtful;
        if (humorous) ++s.humorous_account_doubtful;
        break;
    }
  }
  return s;
}

// ---- agreement ------------------------------------------------------------

double fleiss_kappa_from_counts(const std::vector<std::array<int, 2>>& table) {
  if (table.empty()) throw Error(ErrorCode::NoEligibleItems, "no items in agreement table");
  const int n = table.front()[0] + table.front()[1];
  if (n < 2) throw Error(ErrorCode::InvalidRaterCount, "need at least 2 raters per item");
  const double items = static_cast<double>(table.size());

  double observed_sum = 0.0;
  std::array<double, 2> category_totals{0.0, 0.0};
  for (const auto& row : table) {
    if (row[0] < 0 || row[1] < 0 || row[0] + row[1] != n) {
      throw Error(ErrorCode::InvalidRaterCount, "every item needs exactly " + std::to_string(n) + " ratings");
    }
    double agreeing_pairs = 0.0;
    for (int c = 0; c < 2; ++c) {
      agreeing_pairs += static_cast<double>(row[c]) * (row[c] - 1);
      category_totals[c] += row[c];
    }
    observed_sum += agreeing_pairs / (static_cast<double>(n) * (n - 1));
  }
  const double p_bar = observed_sum / items;
  double p_e = 0.0;
  for (double total : category_totals) {
    const double p = total / (items * n);
    p_e += p * p;
  }
  if (p_bar == 1.0 || p_e == 1.0) return 1.0;
  return (p_bar - p_e) / (1.0 - p_e);
}

double fleiss_kappa(const std::vector<Annotation>& annotations, int n_raters) {
  if (n_raters < 2) throw Error(ErrorCode::InvalidRaterCount, "n_raters must be >= 2");
  // std::map keeps item order deterministic for the floating-point sums.
  std::map<std::string, std::array<int, 2>> per_tweet;
  for (const auto& a : annotations) {
    if (!a.vote.is_countable()) continue;
    auto& row = per_tweet[a.tweet_id];
    ++row[a.vote.is_humorous() ? 0 : 1];
  }
  std::vector<std::array<int, 2>> table;
  for (const auto& [id, row] : per_tweet) {
    if (row[0] + row[1] == n_raters) table.push_back(row);
  }
  if (table.empty()) {
    throw Error(ErrorCode::NoEligibleItems, "no tweet has exactly " + std::to_string(n_raters) + " countable annotations");
  }
  return fleiss_kappa_from_counts(table);
}

// ---- split ----------------------------------------------------------------

SplitResult split(const std::vector<LabeledTweet>& labeled, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "train_fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    switch (labeled[i].label) {
      case Label::Positive: positives.push_back(i); break;
      case Label::Negative: negatives.push_back(i); break;
      case Label::Doubtful:
        throw Error(ErrorCode::DoubtfulPresent, "tweet '" + labeled[i].tweet.id + "' is doubtful");
    }
  }

  SplitResult result;
  Rng rng(seed);
  std::vector<bool> in_train(labeled.size(), false);
  for (auto* cls : {&positives, &negatives}) {
    const Label label = cls == &positives ? Label::Positive : Label::Negative;
    if (cls->empty()) continue;
    if (cls->size() < 2) {
      result.warnings.push_back("class " + std::string(humorkit::to_string(label)) +
                                " has fewer than 2 items; placed in train");
      for (auto i : *cls) in_train[i] = true;
      continue;
    }
    rng.shuffle(std::span<std::size_t>(*cls));
    const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(cls->size())));
    for (std::size_t k = 0; k < n_train; ++k) in_train[(*cls)[k]] = true;
  }
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    (in_train[i] ? result.train : result.test).push_back(labeled[i]);
  }
  return result;
}

// ---- histogram ------------------------------------------------------------

AnnotationHistogram annotation_histogram(const std::vector<Annotation>& annotations) {
  AnnotationHistogram h;
  std::unordered_map<std::string, std::size_t> per_tweet;
  for (const auto& a : annotations) {
    ++h.by_category[a.vote.category()];
    ++h.total;
    auto& count = per_tweet[a.tweet_id];
    if (a.vote.is_countable()) {
      ++count;
    } else {
      ++h.skips;
    }
  }
  for (const auto& [id, count] : per_tweet) ++h.per_tweet[count];
  return h;
}

}  // namespace humorkit::corpus
