#include "humorkit/config.hpp"

#include <cstdlib>

#include "humorkit/io.hpp"
#include "test_util.hpp"

namespace hk = humorkit;
namespace cfg = humorkit::config;
using hk::ErrorCode;

namespace {

/// Clears HUMORKIT_DATA_DIR for the test and restores it afterwards.
class EnvGuard {
 public:
  EnvGuard() {
    if (const char* v = std::getenv("HUMORKIT_DATA_DIR")) saved_ = v;
    unsetenv("HUMORKIT_DATA_DIR");
  }
  ~EnvGuard() {
    if (saved_) setenv("HUMORKIT_DATA_DIR", saved_->c_str(), 1);
    else unsetenv("HUMORKIT_DATA_DIR");
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST(Config, ParseCommentsBlankLinesAndWhitespace) {
  const auto kv = cfg::parse("# run settings\n\nseed = 7\n  model=dt  # tree\nfeatures = dialog, links\n");
  EXPECT_EQ(kv.at("seed"), "7");
  EXPECT_EQ(kv.at("model"), "dt");
  EXPECT_EQ(kv.at("features"), "dialog, links");
}

TEST(Config, ParseRejectsUnknownKeysAndBareLines) {
  EXPECT_ERROR_CODE(cfg::parse("sede = 7\n"), ErrorCode::InvalidConfig);
  EXPECT_ERROR_CODE(cfg::parse("seed 7\n"), ErrorCode::InvalidConfig);
  cfg::KeyValues kv;
  EXPECT_ERROR_CODE(cfg::merge(kv, {{"bogus", "1"}}), ErrorCode::InvalidConfig);
}

TEST(Config, SeedIsMandatory) {
  EXPECT_ERROR_CODE(cfg::resolve(cfg::defaults()), ErrorCode::InvalidConfig);
  auto kv = cfg::defaults();
  kv["seed"] = "abc";
  EXPECT_ERROR_CODE(cfg::resolve(kv), ErrorCode::InvalidConfig);
}

TEST(Config, ResolveTypesAndPaths) {
  auto kv = cfg::defaults();
  kv["seed"] = "99";
  kv["data_dir"] = "/srv/data";
  kv["model"] = "knn";
  kv["knn_k"] = "7";
  const auto rc = cfg::resolve(kv);
  EXPECT_EQ(rc.seed, 99u);
  EXPECT_EQ(rc.model, hk::ml::ModelKind::Knn);
  EXPECT_EQ(rc.hp.knn_k, 7);
  EXPECT_EQ(rc.hp.svm.seed, 99u);
  EXPECT_EQ(rc.tweets, std::filesystem::path("/srv/data/corpus/tweets.jsonl"));
  EXPECT_EQ(rc.model_file, std::filesystem::path("out/model.txt"));
  EXPECT_EQ(rc.features.oov_stacks[1].size(), 2u);
  EXPECT_EQ(rc.features.ordered_names().size(), 16u);
}

TEST(Config, BadValues) {
  auto kv = cfg::defaults();
  kv["seed"] = "1";
  for (auto [k, v] : std::vector<std::pair<std::string, std::string>>{{"model", "rf"},
                                                                      {"train_fraction", "1"},
                                                                      {"pos_threshold", "0.2"},
                                                                      {"include_humorous_account_negatives", "maybe"},
                                                                      {"features", "dialog,jokes"}}) {
    auto bad = kv;
    bad[k] = v;
    EXPECT_ERROR_CODE(cfg::resolve(bad), ErrorCode::InvalidConfig);
  }
}

TEST(Config, PrecedenceDefaultsFileEnvFlags) {
  EnvGuard guard;
  testutil::TempDir dir;
  hk::io::atomic_write(dir / "run.conf", "seed = 5\ndata_dir = here\nmodel = gnb\nsvm_epochs = 7\n");

  auto rc = cfg::build(dir / "run.conf", {});
  EXPECT_EQ(rc.seed, 5u);
  EXPECT_EQ(rc.model, hk::ml::ModelKind::Gnb);
  EXPECT_EQ(rc.hp.svm.epochs, 7);
  EXPECT_EQ(rc.hp.dt.max_depth, 10);
  EXPECT_EQ(rc.data_dir, (dir.path() / "here").lexically_normal());

  setenv("HUMORKIT_DATA_DIR", "/from/env", 1);
  rc = cfg::build(dir / "run.conf", {});
  EXPECT_EQ(rc.data_dir, std::filesystem::path("/from/env"));

  rc = cfg::build(dir / "run.conf", {{"data_dir", "/from/flag"}, {"model", "dt"}});
  EXPECT_EQ(rc.data_dir, std::filesystem::path("/from/flag"));
  EXPECT_EQ(rc.model, hk::ml::ModelKind::Dt);
  EXPECT_EQ(rc.resolved.at("model"), "dt");
}

TEST(Config, RenderThenParseRoundTrips) {
  auto kv = cfg::defaults();
  kv["seed"] = "3";
  kv["static_dir"] = "web";
  const auto text = cfg::render(kv);
  auto back = cfg::parse(text);
  // Keys with empty values render as "k = " and parse back to empty.
  EXPECT_EQ(back, kv);
}

TEST(Config, MissingFileIsIoFailure) {
  EXPECT_ERROR_CODE(cfg::load("/nonexistent/humorkit.conf"), ErrorCode::IoFailure);
}
