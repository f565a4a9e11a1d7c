#include <cmath>

#include "humorkit/ml/bow.hpp"
#include "humorkit/ml/kernels.hpp"
#include "humorkit/ml/knn.hpp"
#include "humorkit/ml/naive_bayes.hpp"
#include "humorkit/ml/rfe.hpp"
#include "humorkit/ml/svm.hpp"
#include "humorkit/ml/tree.hpp"
#include "humorkit/random.hpp"
#include "test_util.hpp"

namespace hk = humorkit;
namespace ml = humorkit::ml;
using hk::ErrorCode;
using hk::Label;

namespace {

ml::Dataset make(std::initializer_list<std::initializer_list<double>> rows, std::vector<Label> labels) {
  ml::Dataset d;
  const auto cols = rows.size() ? rows.begin()->size() : 0;
  d.rows.resize(static_cast<ml::Index>(rows.size()), static_cast<ml::Index>(cols));
  ml::Index r = 0;
  for (const auto& row : rows) {
    ml::Index c = 0;
    for (double v : row) d.rows(r, c++) = v;
    ++r;
  }
  for (std::size_t c = 0; c < cols; ++c) d.feature_names.push_back("f" + std::to_string(c));
  d.labels = std::move(labels);
  return d;
}

constexpr Label P = Label::Positive;
constexpr Label N = Label::Negative;

}  // namespace

TEST(Dataset, ValidateCatchesInconsistencies) {
  auto d = make({{1, 2}, {3, 4}}, {P, N});
  EXPECT_NO_THROW(d.validate());
  d.labels.pop_back();
  EXPECT_ERROR_CODE(d.validate(), ErrorCode::DimensionMismatch);
  d = make({{1, NAN}}, {P});
  EXPECT_ERROR_CODE(d.validate(), ErrorCode::MalformedRecord);
  d = make({{1}}, {Label::Doubtful});
  EXPECT_ERROR_CODE(d.validate(), ErrorCode::MalformedRecord);
}

TEST(Dataset, SelectColumnsAndRows) {
  const auto d = make({{1, 2, 3}, {4, 5, 6}}, {P, N});
  const std::vector<ml::Index> cols = {2, 0};
  const auto s = d.select_columns(cols);
  EXPECT_EQ(s.feature_names, (std::vector<std::string>{"f2", "f0"}));
  EXPECT_EQ(s.rows(1, 0), 6.0);
  const std::vector<ml::Index> rows = {1};
  EXPECT_EQ(d.select_rows(rows).labels, std::vector<Label>{N});
}

TEST(Standardizer, ZeroMeanUnitVarianceAndConstantColumns) {
  const auto d = make({{1, 5}, {3, 5}, {5, 5}}, {P, N, P});
  const auto s = ml::Standardizer::fit(d.rows);
  const auto t = s.transform(d.rows);
  EXPECT_NEAR(t.col(0).mean(), 0.0, 1e-12);
  EXPECT_NEAR(t.col(0).squaredNorm() / 3.0, 1.0, 1e-12);
  EXPECT_TRUE(s.zero_variance[1]);
  EXPECT_EQ(t(0, 1), 0.0);
  EXPECT_ERROR_CODE(ml::Standardizer::fit(ml::RowMatrix(0, 2)), ErrorCode::EmptyDataset);
}

TEST(Bow, VocabularyIsSortedAndCountsTerms) {
  const auto v = ml::bow_fit({{"b", "a"}, {"a", "c", "a"}});
  EXPECT_EQ(v.size(), 3);
  EXPECT_EQ(v.vocabulary.at("a"), 0);
  EXPECT_EQ(v.document_frequency[0], 2);
  const auto x = ml::bow_transform(v, {"a", "a", "z", "c"});
  EXPECT_EQ(x(0), 2.0);
  EXPECT_EQ(x(1), 0.0);
  EXPECT_EQ(x(2), 1.0);
  EXPECT_ERROR_CODE(ml::bow_fit({}), ErrorCode::EmptyCorpus);
}

TEST(Mnb, HandComputedPosterior) {
  // Positive mass: f0=3, f1=1; negative: f0=0, f1=2. alpha=1.
  const auto d = make({{2, 0}, {1, 1}, {0, 2}}, {P, P, N});
  const auto m = ml::mnb_fit(d, 1.0);
  EXPECT_NEAR(m.log_prior(0), std::log(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(m.log_theta(0, 0), std::log(4.0 / 6.0), 1e-12);
  EXPECT_NEAR(m.log_theta(1, 1), std::log(3.0 / 4.0), 1e-12);
  const Eigen::Vector2d joint = ml::mnb_log_joint(m, Eigen::Vector2d(1, 0));
  EXPECT_NEAR(joint(0), std::log(2.0 / 3.0) + std::log(4.0 / 6.0), 1e-12);
  const Eigen::Vector2d post = ml::mnb_log_posterior(m, Eigen::Vector2d(1, 0));
  EXPECT_NEAR(std::exp(post(0)) + std::exp(post(1)), 1.0, 1e-12);
  EXPECT_EQ(ml::mnb_predict(m, Eigen::Vector2d(1, 0)), P);
  EXPECT_EQ(ml::mnb_predict(m, Eigen::Vector2d(0, 3)), N);
}

TEST(Mnb, TieGoesNegativeAndErrors) {
  const auto d = make({{1}, {1}}, {P, N});
  EXPECT_EQ(ml::mnb_predict(ml::mnb_fit(d), Eigen::VectorXd::Ones(1)), N);
  EXPECT_ERROR_CODE(ml::mnb_fit(make({{-1}}, {P})), ErrorCode::NegativeFeatureValue);
  EXPECT_ERROR_CODE(ml::mnb_fit(d, 0.0), ErrorCode::InvalidHyperparameter);
}

TEST(Gnb, MeansVariancesAndClassSize) {
  const auto d = make({{0}, {2}, {10}, {14}}, {P, P, N, N});
  const auto m = ml::gnb_fit(d, 1e-9);
  EXPECT_DOUBLE_EQ(m.mean(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m.mean(1, 0), 12.0);
  EXPECT_NEAR(m.variance(0, 0), 1.0 + m.epsilon, 1e-15);
  EXPECT_NEAR(m.epsilon, 1e-9 * 32.75, 1e-20);
  EXPECT_EQ(ml::gnb_predict(m, Eigen::VectorXd::Constant(1, 1.5)), P);
  EXPECT_EQ(ml::gnb_predict(m, Eigen::VectorXd::Constant(1, 11.0)), N);
  EXPECT_ERROR_CODE(ml::gnb_fit(make({{0}, {1}, {2}}, {P, N, N})), ErrorCode::ClassTooSmall);
}

TEST(Knn, NeighborsTieBreakAndVote) {
  const auto d = make({{0}, {2}, {-2}, {5}, {6}}, {P, N, P, N, N});
  const auto m = ml::knn_fit(d, 3);
  const auto nb = ml::knn_neighbors(m, Eigen::VectorXd::Zero(1));
  EXPECT_EQ(nb, (std::vector<ml::Index>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(ml::knn_positive_fraction(m, Eigen::VectorXd::Zero(1)), 2.0 / 3.0);
  EXPECT_EQ(ml::knn_predict(m, Eigen::VectorXd::Constant(1, 5.5)), N);
  EXPECT_ERROR_CODE(ml::knn_fit(d, 2), ErrorCode::InvalidHyperparameter);
  EXPECT_ERROR_CODE(ml::knn_fit(d, 7), ErrorCode::KTooLarge);
}

TEST(Tree, LearnsXorAndRespectsDepth) {
  const auto d = make({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {N, P, P, N});
  const auto m = ml::dt_fit(d, {-1, 1});
  for (ml::Index i = 0; i < d.size(); ++i) {
    EXPECT_EQ(ml::dt_predict(m, d.rows.row(i).transpose()), d.labels[static_cast<std::size_t>(i)]);
  }
  EXPECT_EQ(m.depth(), 2);
  const auto stump = ml::dt_fit(d, {0, 1});
  EXPECT_EQ(stump.nodes.size(), 1u);
  EXPECT_EQ(stump.depth(), 0);
  EXPECT_ERROR_CODE(ml::dt_fit(d, {3, 0}), ErrorCode::InvalidHyperparameter);
}

TEST(Tree, GiniKernel) {
  EXPECT_DOUBLE_EQ(ml::kernels::gini(Eigen::Vector2d(5, 5)), 0.5);
  EXPECT_DOUBLE_EQ(ml::kernels::gini(Eigen::Vector2d(4, 0)), 0.0);
  EXPECT_DOUBLE_EQ(ml::kernels::gini(Eigen::Vector2d(0, 0)), 0.0);
}

TEST(Svm, SeparatesAndObjectiveFalls) {
  hk::Rng rng(3);
  ml::Dataset d;
  d.feature_names = {"a", "b"};
  d.rows.resize(80, 2);
  for (ml::Index i = 0; i < 80; ++i) {
    const double sign = i % 2 ? 1.0 : -1.0;
    d.rows(i, 0) = sign * 2 + rng.uniform01() - 0.5;
    d.rows(i, 1) = rng.uniform01() - 0.5;
    d.labels.push_back(sign > 0 ? P : N);
  }
  const auto m = ml::svm_fit(d, {0.01, 50, 9});
  ASSERT_EQ(m.objective_history.size(), 50u);
  EXPECT_LT(m.objective_history.back(), m.objective_history.front() + 1e-12);
  for (ml::Index i = 0; i < d.size(); ++i) {
    EXPECT_EQ(ml::svm_predict(m, d.rows.row(i).transpose()), d.labels[static_cast<std::size_t>(i)]);
  }
  EXPECT_GT(std::abs(m.weights(0)), std::abs(m.weights(1)));
  const auto again = ml::svm_fit(d, {0.01, 50, 9});
  EXPECT_EQ(m.weights, again.weights);
  EXPECT_EQ(m.bias, again.bias);
}

TEST(Svm, SingleClassAndBadParams) {
  const auto d = make({{1}, {2}}, {N, N});
  const auto m = ml::svm_fit(d);
  EXPECT_EQ(m.weights.norm(), 0.0);
  EXPECT_EQ(m.bias, -1.0);
  EXPECT_ERROR_CODE(ml::svm_fit(d, {0.0, 10, 0}), ErrorCode::InvalidHyperparameter);
  EXPECT_ERROR_CODE(ml::svm_decision(m, Eigen::Vector2d(1, 1)), ErrorCode::DimensionMismatch);
}

TEST(Kernels, HingeSubgradientMatchesFiniteDifference) {
  hk::Rng rng(8);
  Eigen::MatrixXd X(6, 3);
  for (int i = 0; i < X.size(); ++i) X.data()[i] = rng.uniform01() * 2 - 1;
  Eigen::VectorXd y(6);
  y << 1, -1, 1, 1, -1, -1;
  Eigen::VectorXd w(3);
  w << 0.3, -0.2, 0.1;
  const double b = 0.05;
  const double lambda = 0.1;
  auto [gw, gb] = ml::kernels::hinge_subgradient(w, b, X, y, lambda);
  const double h = 1e-6;
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXd wp = w, wm = w;
    wp(j) += h;
    wm(j) -= h;
    const double fd = (ml::kernels::hinge_objective(wp, b, X, y, lambda) - ml::kernels::hinge_objective(wm, b, X, y, lambda)) / (2 * h);
    EXPECT_NEAR(gw(j), fd, 1e-6);
  }
  const double fdb = (ml::kernels::hinge_objective(w, b + h, X, y, lambda) - ml::kernels::hinge_objective(w, b - h, X, y, lambda)) / (2 * h);
  EXPECT_NEAR(gb, fdb, 1e-6);
}

TEST(Kernels, LogSumExpIsStable) {
  EXPECT_NEAR(ml::kernels::log_sum_exp(Eigen::Vector2d(1000, 1000)), 1000 + std::log(2.0), 1e-9);
  EXPECT_NEAR(ml::kernels::log_sum_exp(Eigen::Vector2d(-1000, -1000)), -1000 + std::log(2.0), 1e-9);
}

TEST(Rfe, DropsNoiseFirst) {
  hk::Rng rng(5);
  ml::Dataset d;
  d.feature_names = {"noise_a", "signal", "noise_b", "weak"};
  d.rows.resize(120, 4);
  for (ml::Index i = 0; i < 120; ++i) {
    const bool pos = i % 3 == 0;
    d.rows(i, 0) = rng.uniform01();
    d.rows(i, 1) = (pos ? 3.0 : 0.0) + rng.uniform01();
    d.rows(i, 2) = rng.uniform01();
    d.rows(i, 3) = (pos ? 0.6 : 0.0) + rng.uniform01();
    d.labels.push_back(pos ? P : N);
  }
  for (const auto& trainer : {ml::svm_importance({0.01, 40, 1}), ml::dt_importance({5, 2})}) {
    const auto r = ml::rfe(trainer, d, 1);
    EXPECT_EQ(r.survivors, std::vector<std::string>{"signal"});
    EXPECT_EQ(r.eliminated.size(), 3u);
    EXPECT_EQ(r.ranking().front(), "signal");
    EXPECT_EQ(r.ranking().size(), 4u);
  }
  EXPECT_ERROR_CODE(ml::rfe(ml::dt_importance(), d, 0), ErrorCode::InvalidHyperparameter);
}
