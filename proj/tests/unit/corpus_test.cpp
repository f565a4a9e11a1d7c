#include "humorkit/corpus.hpp"

#include <algorithm>
#include <random>

#include "humorkit/io.hpp"
#include "test_util.hpp"

namespace hk = humorkit;
using hk::ErrorCode;
using hk::Label;
using hk::corpus::AccountKind;
using hk::corpus::Annotation;
using hk::corpus::Tweet;
using hk::corpus::Vote;

namespace {

Tweet tweet(const std::string& id, AccountKind kind = AccountKind::Humorous) {
  return {id, "texto de " + id, "cuenta", kind};
}

Annotation vote(const std::string& tweet_id, const std::string& session, std::int64_t ts, Vote v) {
  return {tweet_id, session, ts, v};
}

}  // namespace

TEST(Vote, WireFormRoundTrips) {
  for (const char* s : {"star1", "star2", "star3", "star4", "star5", "not_humor", "skip"}) {
    auto v = Vote::parse(s);
    ASSERT_TRUE(v.has_value()) << s;
    EXPECT_EQ(v->to_string(), s);
  }
  EXPECT_FALSE(Vote::parse("star0"));
  EXPECT_FALSE(Vote::parse("star6"));
  EXPECT_FALSE(Vote::parse("STAR1"));
  EXPECT_ERROR_CODE(Vote::star(9), ErrorCode::MalformedVote);
}

TEST(Vote, CategoriesAreDense) {
  EXPECT_EQ(Vote::star(1).category(), 0u);
  EXPECT_EQ(Vote::star(5).category(), 4u);
  EXPECT_EQ(Vote::not_humor().category(), 5u);
  EXPECT_EQ(Vote::skip().category(), 6u);
  EXPECT_TRUE(Vote::star(2).is_humorous());
  EXPECT_FALSE(Vote::skip().is_countable());
}

TEST(LoadTweets, ParsesAndRejectsDuplicates) {
  testutil::TempDir dir;
  const auto path = dir / "tweets.jsonl";
  hk::io::atomic_write(path,
                       R"({"id":"a","text":"hola","account":"x","account_kind":"news"})"
                       "\n\n"
                       R"({"id":"b","text":"chau","account":"y","account_kind":"humorous"})"
                       "\n");
  const auto tweets = hk::corpus::load_tweets(path);
  ASSERT_EQ(tweets.size(), 2u);
  EXPECT_EQ(tweets[0].account_kind, AccountKind::News);
  EXPECT_EQ(tweets[1].text, "chau");

  hk::io::atomic_write(path,
                       R"({"id":"a","text":"hola","account":"x","account_kind":"news"})"
                       "\n"
                       R"({"id":"a","text":"otra","account":"x","account_kind":"news"})"
                       "\n");
  EXPECT_ERROR_CODE(hk::corpus::load_tweets(path), ErrorCode::DuplicateId);
}

TEST(LoadTweets, MalformedLinesNameTheLine) {
  try {
    hk::corpus::parse_tweet(R"({"id":"a","text":"x","account":"y","account_kind":"satire"})", 7);
    FAIL();
  } catch (const hk::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedRecord);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
  EXPECT_ERROR_CODE(hk::corpus::parse_tweet("not json", 1), ErrorCode::MalformedRecord);
  EXPECT_ERROR_CODE(hk::corpus::parse_annotation(R"({"tweet_id":"a","session_id":"s","timestamp_ms":1,"vote":"meh"})", 1),
                    ErrorCode::MalformedRecord);
}

TEST(LoadAnnotations, MissingFileIsIoFailure) {
  EXPECT_ERROR_CODE(hk::corpus::load_annotations("/nonexistent/annotations.jsonl"), ErrorCode::IoFailure);
}

TEST(Annotation, JsonLineRoundTrips) {
  const Annotation a = vote("t1", "s9", 1234, Vote::star(4));
  const Annotation b = hk::corpus::parse_annotation(hk::corpus::to_json_line(a), 1);
  EXPECT_EQ(b.tweet_id, "t1");
  EXPECT_EQ(b.session_id, "s9");
  EXPECT_EQ(b.timestamp_ms, 1234);
  EXPECT_EQ(b.vote, Vote::star(4));
}

TEST(BurstFilter, DropsFastIdenticalRuns) {
  std::vector<Annotation> in;
  for (int i = 0; i < 5; ++i) in.push_back(vote("t" + std::to_string(i), "bot", 1000 + i * 100, Vote::star(5)));
  for (int i = 0; i < 4; ++i) in.push_back(vote("u" + std::to_string(i), "human", 1000 + i * 100, Vote::star(5)));
  const auto out = hk::corpus::filter_annotations(in);
  ASSERT_EQ(out.size(), 4u);
  for (const auto& a : out) EXPECT_EQ(a.session_id, "human");
}

TEST(BurstFilter, GapAtThresholdBreaksTheRun) {
  std::vector<Annotation> in;
  for (int i = 0; i < 6; ++i) in.push_back(vote("t" + std::to_string(i), "s", i * 2000, Vote::not_humor()));
  EXPECT_EQ(hk::corpus::filter_annotations(in).size(), 6u);
  hk::corpus::BurstFilterConfig tight{2001, 5};
  EXPECT_TRUE(hk::corpus::filter_annotations(in, tight).empty());
}

TEST(BurstFilter, DifferentVotesBreakTheRun) {
  std::vector<Annotation> in;
  for (int i = 0; i < 8; ++i) {
    in.push_back(vote("t" + std::to_string(i), "s", i * 100, i % 2 ? Vote::star(1) : Vote::not_humor()));
  }
  EXPECT_EQ(hk::corpus::filter_annotations(in).size(), 8u);
}

TEST(BurstFilter, IsIdempotentOnRandomStreams) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Annotation> in;
    std::int64_t ts = 0;
    for (int i = 0; i < 40; ++i) {
      ts += static_cast<std::int64_t>(rng() % 3000);
      in.push_back(vote("t" + std::to_string(i), "s" + std::to_string(rng() % 3), ts,
                        rng() % 3 ? Vote::star(3) : Vote::not_humor()));
    }
    hk::corpus::BurstFilterConfig cfg{1500, 3};
    const auto once = hk::corpus::filter_annotations(in, cfg);
    const auto twice = hk::corpus::filter_annotations(once, cfg);
    ASSERT_EQ(once.size(), twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      EXPECT_EQ(once[i].tweet_id, twice[i].tweet_id);
      EXPECT_EQ(once[i].timestamp_ms, twice[i].timestamp_ms);
    }
  }
}

TEST(BurstFilter, RejectsBadConfig) {
  EXPECT_ERROR_CODE(hk::corpus::filter_annotations({}, {0, 5}), ErrorCode::InvalidConfig);
  EXPECT_ERROR_CODE(hk::corpus::filter_annotations({}, {2000, 1}), ErrorCode::InvalidConfig);
}

TEST(Aggregate, RatioAndLabels) {
  const std::vector<Tweet> tweets = {tweet("p"), tweet("n"), tweet("d"), tweet("z"), tweet("news", AccountKind::News)};
  std::vector<Annotation> a;
  std::int64_t ts = 0;
  auto add = [&](const std::string& id, Vote v) { a.push_back(vote(id, "s" + std::to_string(ts), ts += 10000, v)); };
  add("p", Vote::star(1));
  add("p", Vote::star(5));
  add("p", Vote::not_humor());
  add("p", Vote::skip());
  add("n", Vote::not_humor());
  add("n", Vote::not_humor());
  add("d", Vote::star(2));
  add("d", Vote::not_humor());
  add("z", Vote::skip());
  add("news", Vote::star(5));
  add("news", Vote::star(5));

  const auto labeled = hk::corpus::aggregate_labels(tweets, a);
  ASSERT_EQ(labeled.size(), 5u);
  EXPECT_EQ(labeled[0].label, Label::Positive);
  EXPECT_DOUBLE_EQ(*labeled[0].humor_ratio, 2.0 / 3.0);
  EXPECT_EQ(labeled[0].n_annotations, 3);
  EXPECT_EQ(labeled[1].label, Label::Negative);
  EXPECT_EQ(labeled[2].label, Label::Doubtful);
  EXPECT_EQ(labeled[3].label, Label::Doubtful);
  EXPECT_FALSE(labeled[3].humor_ratio.has_value());
  EXPECT_EQ(labeled[4].label, Label::Negative);
  EXPECT_DOUBLE_EQ(*labeled[4].humor_ratio, 1.0);
}

TEST(Aggregate, UnknownTweetIsAnError) {
  EXPECT_ERROR_CODE(hk::corpus::aggregate_labels({tweet("a")}, {vote("b", "s", 0, Vote::skip())}),
                    ErrorCode::UnknownTweetId);
}

TEST(Aggregate, ConfigValidation) {
  hk::corpus::AggregationConfig bad{0.3, 0.6, false};
  EXPECT_ERROR_CODE(bad.validate(), ErrorCode::InvalidConfig);
}

TEST(TrainingPopulation, HumorousAccountNegativesAreOptIn) {
  std::vector<hk::corpus::LabeledTweet> labeled = {
      {tweet("a"), Label::Positive, 1.0, 3},
      {tweet("b"), Label::Negative, 0.0, 3},
      {tweet("c"), Label::Doubtful, 0.5, 2},
      {tweet("d", AccountKind::News), Label::Negative, 0.0, 1},
  };
  auto ids = [](const std::vector<hk::corpus::LabeledTweet>& v) {
    std::vector<std::string> out;
    for (const auto& l : v) out.push_back(l.tweet.id);
    return out;
  };
  EXPECT_EQ(ids(hk::corpus::training_population(labeled)), (std::vector<std::string>{"a", "d"}));
  hk::corpus::AggregationConfig cfg;
  cfg.include_humorous_account_negatives = true;
  EXPECT_EQ(ids(hk::corpus::training_population(labeled, cfg)), (std::vector<std::string>{"a", "b", "d"}));
}

TEST(WriteLabeled, IsStableJsonl) {
  testutil::TempDir dir;
  std::vector<hk::corpus::LabeledTweet> labeled = {{tweet("a"), Label::Positive, 0.75, 4},
                                                   {tweet("b"), Label::Doubtful, std::nullopt, 0}};
  hk::corpus::write_labeled(dir / "labeled.jsonl", labeled);
  const auto lines = hk::io::read_lines(dir / "labeled.jsonl");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0],
            R"({"account":"cuenta","account_kind":"humorous","humor_ratio":0.75,"id":"a","label":"positive","n_annotations":4,"text":"texto de a"})");
  EXPECT_NE(lines[1].find(R"("humor_ratio":null)"), std::string::npos);
}

TEST(Kappa, NoEligibleItems) {
  EXPECT_ERROR_CODE(hk::corpus::fleiss_kappa({vote("a", "s", 0, Vote::star(1))}, 3), ErrorCode::NoEligibleItems);
}

TEST(Kappa, OnlyTweetsWithExactlyNCountableVotes) {
  std::vector<Annotation> a = {
      vote("x", "1", 0, Vote::star(1)),     vote("x", "2", 0, Vote::star(2)),
      vote("y", "1", 0, Vote::not_humor()), vote("y", "2", 0, Vote::not_humor()),
      vote("y", "3", 0, Vote::skip()),      vote("z", "1", 0, Vote::star(1)),
      vote("z", "2", 0, Vote::not_humor()), vote("z", "3", 0, Vote::not_humor()),
  };
  // Only x and y are used: both agree internally.
  EXPECT_EQ(hk::corpus::fleiss_kappa(a, 2), 1.0);
}

TEST(Kappa, FromCountsMatchesFormula) {
  // HH, HH, HN, NN: P = 0.75, Pe = (5/8)^2 + (3/8)^2.
  const double pe = 25.0 / 64 + 9.0 / 64;
  EXPECT_NEAR(hk::corpus::fleiss_kappa_from_counts({{2, 0}, {2, 0}, {1, 1}, {0, 2}}), (0.75 - pe) / (1 - pe), 1e-12);
  // Chance-level agreement.
  EXPECT_NEAR(hk::corpus::fleiss_kappa_from_counts({{2, 0}, {1, 1}, {1, 1}, {0, 2}}), 0.0, 1e-12);
}

TEST(Split, StratifiedDeterministicAndOrderPreserving) {
  std::vector<hk::corpus::LabeledTweet> labeled;
  for (int i = 0; i < 50; ++i) {
    labeled.push_back({tweet("t" + std::to_string(100 + i)), i % 5 == 0 ? Label::Positive : Label::Negative, 0.0, 1});
  }
  const auto a = hk::corpus::split(labeled, 0.8, 42);
  const auto b = hk::corpus::split(labeled, 0.8, 42);
  const auto c = hk::corpus::split(labeled, 0.8, 43);
  ASSERT_EQ(a.train.size(), 40u);
  ASSERT_EQ(a.test.size(), 10u);
  EXPECT_EQ(std::count_if(a.train.begin(), a.train.end(), [](auto& l) { return l.label == Label::Positive; }), 8);
  EXPECT_EQ(std::count_if(a.test.begin(), a.test.end(), [](auto& l) { return l.label == Label::Positive; }), 2);
  for (std::size_t i = 0; i < a.test.size(); ++i) EXPECT_EQ(a.test[i].tweet.id, b.test[i].tweet.id);
  bool differs = false;
  for (std::size_t i = 0; i < a.test.size(); ++i) differs |= a.test[i].tweet.id != c.test[i].tweet.id;
  EXPECT_TRUE(differs);
  EXPECT_TRUE(std::is_sorted(a.train.begin(), a.train.end(),
                             [](auto& x, auto& y) { return x.tweet.id < y.tweet.id; }));
}

TEST(Split, RejectsDoubtfulAndWarnsOnTinyClass) {
  std::vector<hk::corpus::LabeledTweet> labeled = {{tweet("a"), Label::Doubtful, 0.5, 2}};
  EXPECT_ERROR_CODE(hk::corpus::split(labeled, 0.8, 1), ErrorCode::DoubtfulPresent);
  labeled = {{tweet("a"), Label::Positive, 1.0, 2}, {tweet("b"), Label::Negative, 0.0, 2},
             {tweet("c"), Label::Negative, 0.0, 2}};
  const auto s = hk::corpus::split(labeled, 0.5, 1);
  EXPECT_EQ(s.warnings.size(), 1u);
  EXPECT_EQ(s.train.front().tweet.id, "a");
  EXPECT_ERROR_CODE(hk::corpus::split(labeled, 1.0, 1), ErrorCode::InvalidConfig);
}

TEST(Histogram, CountsCategoriesAndPerTweet) {
  const std::vector<Annotation> a = {vote("x", "1", 0, Vote::star(1)), vote("x", "2", 0, Vote::skip()),
                                     vote("y", "1", 0, Vote::not_humor()), vote("y", "2", 0, Vote::star(1)),
                                     vote("z", "3", 0, Vote::skip())};
  const auto h = hk::corpus::annotation_histogram(a);
  EXPECT_EQ(h.total, 5u);
  EXPECT_EQ(h.skips, 2u);
  EXPECT_EQ(h.count(Vote::star(1)), 2u);
  EXPECT_EQ(h.count(Vote::not_humor()), 1u);
  EXPECT_EQ(h.per_tweet.at(0), 1u);  // z
  EXPECT_EQ(h.per_tweet.at(1), 1u);  // x
  EXPECT_EQ(h.per_tweet.at(2), 1u);  // y
}

TEST(BundledCorpus, BurstSessionsAreFiltered) {
  const auto raw = hk::corpus::load_annotations(testutil::kDataDir / "corpus/annotations.jsonl");
  const auto filtered = hk::corpus::filter_annotations(raw);
  EXPECT_LT(filtered.size(), raw.size());
  for (const auto& a : filtered) EXPECT_NE(a.session_id.rfind("bot", 0), 0u) << a.session_id;
}
