// humorkit command-line driver.

#include <pthread.h>
#include <signal.h>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "humorkit/config.hpp"
#include "humorkit/corpus.hpp"
#include "humorkit/error.hpp"
#include "humorkit/eval.hpp"
#include "humorkit/features.hpp"
#include "humorkit/io.hpp"
#include "humorkit/ml/model.hpp"
#include "humorkit/ml/rfe.hpp"
#include "humorkit/pipeline.hpp"
#include "humorkit/service.hpp"

namespace hk = humorkit;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config_file;
  std::vector<std::string> sets;
  std::string data_dir;
  std::string output_dir;
  std::string model;
  std::string seed;
  std::string features;
  std::string enable;
  std::string disable;
};

hk::config::RunConfig load_config(const Options& opt) {
  hk::config::KeyValues overrides;
  for (const auto& s : opt.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw hk::Error(hk::ErrorCode::InvalidConfig, "--set expects key=value: " + s);
    overrides[s.substr(0, eq)] = s.substr(eq + 1);
  }
  if (!opt.data_dir.empty()) overrides["data_dir"] = opt.data_dir;
  if (!opt.output_dir.empty()) overrides["output_dir"] = opt.output_dir;
  if (!opt.model.empty()) overrides["model"] = opt.model;
  if (!opt.seed.empty()) overrides["seed"] = opt.seed;
  if (!opt.features.empty()) overrides["features"] = opt.features;

  if (!opt.enable.empty() || !opt.disable.empty()) {
    // Resolve once to learn the feature set the file and --features produce.
    auto base = hk::config::defaults();
    if (!opt.config_file.empty()) hk::config::merge(base, hk::config::load(opt.config_file));
    hk::config::merge(base, overrides);
    std::set<std::string> names;
    std::stringstream in(base["features"]);
    for (std::string n; std::getline(in, n, ',');) {
      if (!n.empty()) names.insert(n);
    }
    std::stringstream en(opt.enable);
    for (std::string n; std::getline(en, n, ',');) {
      if (!n.empty()) names.insert(n);
    }
    std::stringstream dis(opt.disable);
    for (std::string n; std::getline(dis, n, ',');) names.erase(n);
    std::string joined;
    for (auto name : hk::features::kFeatureNames) {
      if (!names.count(std::string(name))) continue;
      if (!joined.empty()) joined += ',';
      joined += name;
    }
    for (const auto& n : names) {
      if (!hk::features::is_known_feature(n)) throw hk::Error(hk::ErrorCode::InvalidConfig, "unknown feature '" + n + "'");
    }
    overrides["features"] = joined;
  }
  return hk::config::build(opt.config_file, overrides);
}

void write_resolved(const hk::config::RunConfig& cfg) {
  hk::io::atomic_write(cfg.output_dir / "run-config.resolved", hk::config::render(cfg.resolved));
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string corpus_report(const hk::pipeline::BuiltCorpus& built) {
  const auto s = hk::corpus::summarize(built.labeled);
  const auto h = hk::corpus::annotation_histogram(built.annotations);
  std::ostringstream out;
  out << "tweets " << built.tweets.size() << "\n";
  out << "annotations " << built.raw_annotations << " (after burst filter " << built.annotations.size() << ")\n";
  out << "positive " << s.positive << "\nnegative " << s.negative << "\ndoubtful " << s.doubtful << "\n";
  out << "humorous_accounts positive " << s.humorous_account_positive << " negative " << s.humorous_account_negative
      << " doubtful " << s.humorous_account_doubtful << "\n";
  out << "votes by category\n";
  for (std::size_t c = 0; c < hk::corpus::kVoteCategories; ++c) {
    const double share = h.total ? static_cast<double>(h.by_category[c]) / static_cast<double>(h.total) : 0.0;
    char line[96];
    std::snprintf(line, sizeof line, "  %-10s %7zu  %6.3f\n", std::string(hk::corpus::vote_category_name(c)).c_str(),
                  h.by_category[c], share);
    out << line;
  }
  out << "countable votes per tweet\n";
  for (const auto& [votes, tweets] : h.per_tweet) out << "  " << votes << " " << tweets << "\n";
  return out.str();
}

int cmd_corpus(const Options& opt, bool build) {
  const auto cfg = load_config(opt);
  const auto built = hk::pipeline::build_corpus(cfg);
  const std::string report = corpus_report(built);
  if (build) {
    hk::corpus::write_labeled(cfg.output_dir / "labeled.jsonl", built.labeled);
    hk::io::atomic_write(cfg.output_dir / "corpus-stats.txt", report);
    write_resolved(cfg);
  }
  std::cout << report;
  return 0;
}

int cmd_kappa(const Options& opt, int raters) {
  const auto cfg = load_config(opt);
  const auto annotations =
      hk::corpus::filter_annotations(hk::corpus::load_annotations(cfg.annotations), cfg.burst);
  const double kappa = hk::corpus::fleiss_kappa(annotations, raters);
  std::cout << "raters " << raters << "\nkappa " << hk::io::format_double(kappa) << "\n";
  return 0;
}

int cmd_extract(const Options& opt) {
  const auto cfg = load_config(opt);
  const auto built = hk::pipeline::build_corpus(cfg);
  const auto population = hk::corpus::training_population(built.labeled, cfg.aggregation);
  const auto res = hk::features::FeatureResources::load(cfg.features);
  const auto vectors = hk::pipeline::extract(population, cfg.features, res, cfg.threads);
  std::vector<hk::Label> labels;
  for (const auto& t : population) labels.push_back(t.label);
  const fs::path out = cfg.output_dir / "features.csv";
  hk::io::atomic_write(out, hk::features::feature_csv(vectors, labels, cfg.features.ordered_names()));
  write_resolved(cfg);
  std::cout << "wrote " << vectors.size() << " rows to " << out.string() << "\n";
  return 0;
}

int cmd_train(const Options& opt) {
  const auto cfg = load_config(opt);
  const auto built = hk::pipeline::build_corpus(cfg);
  const auto split = hk::pipeline::split_population(cfg, built);
  print_warnings(split.warnings);
  const auto res = hk::features::FeatureResources::load(cfg.features);
  const auto train = hk::pipeline::featurize(split.train, cfg.features, res, cfg.threads);
  const auto model = hk::ml::train(cfg.model, train, cfg.hp);
  hk::ml::save_model(model, cfg.model_file);
  write_resolved(cfg);
  std::cout << "trained " << hk::ml::to_string(cfg.model) << " on " << train.size() << " tweets ("
            << train.count(hk::Label::Positive) << " positive), saved to " << cfg.model_file.string() << "\n";
  return 0;
}

int cmd_eval(const Options& opt) {
  const auto cfg = load_config(opt);
  const auto model = hk::ml::load_model(cfg.model_file);
  const auto built = hk::pipeline::build_corpus(cfg);
  const auto split = hk::pipeline::split_population(cfg, built);
  print_warnings(split.warnings);
  const auto rows = hk::pipeline::evaluate_run(cfg, model, split);
  const std::string table = hk::eval::format_table(rows);
  hk::io::atomic_write(cfg.output_dir / "report.txt", table);
  hk::io::atomic_write(cfg.output_dir / "report.json", hk::eval::to_json(rows));
  write_resolved(cfg);
  std::cout << table;
  const auto& cm = rows.front().cm;
  std::cout << "confusion tp " << cm.tp << " fp " << cm.fp << " fn " << cm.fn << " tn " << cm.tn << "\n";
  return 0;
}

int cmd_predict(const Options& opt, const std::vector<std::string>& texts, const std::string& input) {
  const auto cfg = load_config(opt);
  const auto model = hk::ml::load_model(cfg.model_file);
  const auto fcfg = hk::pipeline::for_model(cfg.features, model);
  const auto res = hk::features::FeatureResources::load(fcfg);

  std::vector<hk::features::TextItem> items;
  for (const auto& t : texts) items.push_back({std::to_string(items.size() + 1), t});
  if (!input.empty()) {
    const auto lines = input == "-" ? [] {
      std::vector<std::string> v;
      for (std::string l; std::getline(std::cin, l);) v.push_back(l);
      return v;
    }()
                                    : hk::io::read_lines(input);
    for (const auto& l : lines) {
      if (!l.empty()) items.push_back({std::to_string(items.size() + 1), l});
    }
  }
  if (items.empty()) throw hk::Error(hk::ErrorCode::EmptyDataset, "no input texts (use --text or --input)");

  // "\n" inside a --text argument is read as a line break so dialog can be typed inline.
  for (auto& item : items) {
    for (std::size_t p = item.text.find("\\n"); p != std::string::npos; p = item.text.find("\\n", p + 1)) {
      item.text.replace(p, 2, "\n");
    }
  }
  const auto vectors = hk::features::extract_many(items, fcfg, res, cfg.threads);
  std::cout << "label\tscore\ttext\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Eigen::Map<const Eigen::VectorXd> row(vectors[i].values.data(),
                                                static_cast<Eigen::Index>(vectors[i].values.size()));
    std::string flat = items[i].text;
    std::replace(flat.begin(), flat.end(), '\n', ' ');
    std::cout << hk::to_string(hk::ml::predict(model, row)) << "\t"
              << hk::io::format_double(hk::ml::score(model, row)) << "\t" << flat << "\n";
  }
  return 0;
}

int cmd_rfe(const Options& opt, const std::string& features_csv, int n_target) {
  const auto cfg = load_config(opt);
  hk::ml::Dataset data;
  if (!features_csv.empty()) {
    data = hk::features::parse_feature_csv(hk::io::read_file(features_csv)).data;
  } else {
    const auto built = hk::pipeline::build_corpus(cfg);
    const auto split = hk::pipeline::split_population(cfg, built);
    print_warnings(split.warnings);
    const auto res = hk::features::FeatureResources::load(cfg.features);
    data = hk::pipeline::featurize(split.train, cfg.features, res, cfg.threads);
  }
  hk::ml::ImportanceFn trainer;
  if (cfg.model == hk::ml::ModelKind::Svm) {
    trainer = hk::ml::svm_importance(cfg.hp.svm);
  } else if (cfg.model == hk::ml::ModelKind::Dt) {
    trainer = hk::ml::dt_importance(cfg.hp.dt);
  } else {
    throw hk::Error(hk::ErrorCode::InvalidConfig, "rfe needs model = svm or dt");
  }
  const auto result = hk::ml::rfe(trainer, data, n_target);
  std::ostringstream out;
  out << "eliminated (first to last)\n";
  for (std::size_t i = 0; i < result.eliminated.size(); ++i) out << "  " << i + 1 << " " << result.eliminated[i] << "\n";
  out << "survivors (most important first)\n";
  for (std::size_t i = 0; i < result.survivors.size(); ++i) {
    out << "  " << result.survivors[i] << " " << hk::io::format_double(result.survivor_importance(static_cast<Eigen::Index>(i)))
        << "\n";
  }
  hk::io::atomic_write(cfg.output_dir / "rfe.txt", out.str());
  write_resolved(cfg);
  std::cout << out.str();
  return 0;
}

int cmd_serve(const Options& opt, int port) {
  auto cfg = load_config(opt);
  if (port >= 0) cfg.serve_port = port;
  hk::service::AnnotationService service(hk::corpus::load_tweets(cfg.tweets), cfg.annotations, cfg.seed);
  hk::service::ServerOptions so;
  so.host = cfg.serve_host;
  so.port = cfg.serve_port;
  so.static_dir = cfg.static_dir;
  hk::service::HttpServer server(service, so);

  // Block the stop signals before the worker threads exist so only sigwait sees them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  const int bound = server.start();
  std::cout << "serving " << service.pool_size() << " tweets on http://" << so.host << ":" << bound << std::endl;
  int received = 0;
  sigwait(&stop_signals, &received);
  server.stop();
  std::cout << "stopped after " << service.get_stats().total << " annotations on file" << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"humorkit: humor classification for Spanish tweets"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", opt.config_file, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("--set", opt.sets, "override a config key (key=value), repeatable");
    sub->add_option("--data-dir", opt.data_dir, "data root (overrides HUMORKIT_DATA_DIR)");
    sub->add_option("-o,--output-dir", opt.output_dir, "output directory");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--model", opt.model, "mnb | gnb | knn | dt | svm | majority");
    sub->add_option("--features", opt.features, "comma-separated feature list");
    sub->add_option("--enable", opt.enable, "features to add to the configured set");
    sub->add_option("--disable", opt.disable, "features to remove from the configured set");
  };

  auto* corpus_cmd = app.add_subcommand("corpus", "build or summarize the labeled corpus");
  corpus_cmd->require_subcommand(1);
  auto* corpus_build = corpus_cmd->add_subcommand("build", "filter, aggregate and write labeled.jsonl");
  auto* corpus_stats = corpus_cmd->add_subcommand("stats", "print corpus composition");
  add_common(corpus_build);
  add_common(corpus_stats);

  int raters = 0;
  auto* kappa_cmd = app.add_subcommand("kappa", "Fleiss' kappa over tweets with exactly N votes");
  kappa_cmd->add_option("--raters", raters, "votes per tweet")->required()->check(CLI::PositiveNumber);
  add_common(kappa_cmd);

  auto* extract_cmd = app.add_subcommand("extract", "write features.csv for the training population");
  add_common(extract_cmd);
  auto* train_cmd = app.add_subcommand("train", "fit the configured model on the train split");
  add_common(train_cmd);
  auto* eval_cmd = app.add_subcommand("eval", "score the model and both baselines on the test split");
  add_common(eval_cmd);

  std::vector<std::string> texts;
  std::string input;
  auto* predict_cmd = app.add_subcommand("predict", "label new texts");
  predict_cmd->add_option("-t,--text", texts, "text to classify, repeatable");
  predict_cmd->add_option("-i,--input", input, "file with one text per line, or - for stdin");
  add_common(predict_cmd);

  std::string features_csv;
  int n_target = 1;
  auto* rfe_cmd = app.add_subcommand("rfe", "recursive feature elimination ranking");
  rfe_cmd->add_option("--features-csv", features_csv, "use a CSV from extract instead of extracting")
      ->check(CLI::ExistingFile);
  rfe_cmd->add_option("--keep", n_target, "features left when elimination stops")->check(CLI::PositiveNumber);
  add_common(rfe_cmd);

  int port = -1;
  auto* serve_cmd = app.add_subcommand("serve", "run the annotation service");
  serve_cmd->add_option("--port", port, "listen port (0 picks a free one)");
  add_common(serve_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus_build->parsed()) return cmd_corpus(opt, true);
    if (corpus_stats->parsed()) return cmd_corpus(opt, false);
    if (kappa_cmd->parsed()) return cmd_kappa(opt, raters);
    if (extract_cmd->parsed()) return cmd_extract(opt);
    if (train_cmd->parsed()) return cmd_train(opt);
    if (eval_cmd->parsed()) return cmd_eval(opt);
    if (predict_cmd->parsed()) return cmd_predict(opt, texts, input);
    if (rfe_cmd->parsed()) return cmd_rfe(opt, features_csv, n_target);
    if (serve_cmd->parsed()) return cmd_serve(opt, port);
  } catch (const hk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
