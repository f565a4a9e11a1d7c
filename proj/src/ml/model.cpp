#include "humorkit/ml/model.hpp"

#include <charconv>
#include <sstream>

#include "humorkit/error.hpp"
#include "humorkit/io.hpp"

namespace humorkit::ml {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

MajorityModel majority_fit(const Dataset& train) {
  train.validate();
  if (train.size() == 0) throw Error(ErrorCode::EmptyDataset, "majority baseline needs training rows");
  const std::size_t pos = train.count(Label::Positive);
  const std::size_t neg = train.count(Label::Negative);
  return MajorityModel{pos > neg ? Label::Positive : Label::Negative};
}

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Mnb: return "mnb";
    case ModelKind::Gnb: return "gnb";
    case ModelKind::Knn: return "knn";
    case ModelKind::Dt: return "dt";
    case ModelKind::Svm: return "svm";
    case ModelKind::Majority: return "majority";
  }
  return "svm";
}

std::optional<ModelKind> parse_model_kind(std::string_view s) noexcept {
  for (ModelKind k : {ModelKind::Mnb, ModelKind::Gnb, ModelKind::Knn, ModelKind::Dt, ModelKind::Svm,
                      ModelKind::Majority}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

ModelKind TrainedModel::kind() const noexcept {
  return std::visit(overloaded{
                        [](const MnbModel&) { return ModelKind::Mnb; },
                        [](const GnbModel&) { return ModelKind::Gnb; },
                        [](const KnnModel&) { return ModelKind::Knn; },
                        [](const DtModel&) { return ModelKind::Dt; },
                        [](const SvmModel&) { return ModelKind::Svm; },
                        [](const MajorityModel&) { return ModelKind::Majority; },
                    },
                    model);
}

TrainedModel train(ModelKind kind, const Dataset& data, const Hyperparameters& hp) {
  data.validate();
  TrainedModel out;
  out.feature_names = data.feature_names;
  switch (kind) {
    case ModelKind::Mnb: out.model = mnb_fit(data, hp.mnb_alpha); break;
    case ModelKind::Gnb: out.model = gnb_fit(data, hp.gnb_var_smoothing); break;
    case ModelKind::Dt: out.model = dt_fit(data, hp.dt); break;
    case ModelKind::Majority: out.model = majority_fit(data); break;
    case ModelKind::Knn:
    case ModelKind::Svm: {
      Standardizer s = Standardizer::fit(data.rows);
      const Dataset standardized = s.transform(data);
      if (kind == ModelKind::Knn) {
        out.model = knn_fit(standardized, hp.knn_k);
      } else {
        out.model = svm_fit(standardized, hp.svm);
      }
      out.standardizer = std::move(s);
      break;
    }
  }
  return out;
}

namespace {

Eigen::VectorXd prepare(const TrainedModel& m, const Eigen::Ref<const Eigen::VectorXd>& raw) {
  if (raw.size() != static_cast<Index>(m.feature_names.size())) {
    throw Error(ErrorCode::DimensionMismatch, "row has " + std::to_string(raw.size()) + " features, model expects " +
                                                  std::to_string(m.feature_names.size()));
  }
  return m.standardizer ? m.standardizer->transform(raw) : Eigen::VectorXd(raw);
}

}  // namespace

Label predict(const TrainedModel& m, const Eigen::Ref<const Eigen::VectorXd>& raw_row) {
  const Eigen::VectorXd x = prepare(m, raw_row);
  return std::visit(overloaded{
                        [&](const MnbModel& mm) { return mnb_predict(mm, x); },
                        [&](const GnbModel& mm) { return gnb_predict(mm, x); },
                        [&](const KnnModel& mm) { return knn_predict(mm, x); },
                        [&](const DtModel& mm) { return dt_predict(mm, x); },
                        [&](const SvmModel& mm) { return svm_predict(mm, x); },
                        [&](const MajorityModel& mm) { return mm.label; },
                    },
                    m.model);
}

double score(const TrainedModel& m, const Eigen::Ref<const Eigen::VectorXd>& raw_row) {
  const Eigen::VectorXd x = prepare(m, raw_row);
  return std::visit(overloaded{
                        [&](const MnbModel& mm) {
                          const Eigen::Vector2d s = mnb_log_joint(mm, x);
                          return s(0) - s(1);
                        },
                        [&](const GnbModel& mm) {
                          const Eigen::Vector2d s = gnb_log_joint(mm, x);
                          return s(0) - s(1);
                        },
                        [&](const KnnModel& mm) { return knn_positive_fraction(mm, x); },
                        [&](const DtModel& mm) { return dt_positive_fraction(mm, x); },
                        [&](const SvmModel& mm) { return svm_decision(mm, x); },
                        [&](const MajorityModel& mm) { return mm.label == Label::Positive ? 1.0 : 0.0; },
                    },
                    m.model);
}

// ---- serialization --------------------------------------------------------

namespace {

constexpr std::string_view kMagic = "humorkit-model";

class Writer {
 public:
  void line(std::string_view key) { out_ << key << '\n'; }

  template <typename T>
  void value(std::string_view key, const T& v) {
    out_ << key << ' ' << v << '\n';
  }

  void real(std::string_view key, double v) { out_ << key << ' ' << io::format_hex_double(v) << '\n'; }

  template <typename Derived>
  void reals(std::string_view key, const Eigen::DenseBase<Derived>& v) {
    out_ << key;
    for (Index i = 0; i < v.size(); ++i) out_ << ' ' << io::format_hex_double(v(i));
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::CorruptModel, what); }

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  std::string_view next_line() {
    if (cursor_ >= lines_.size()) corrupt("unexpected end of model file");
    return lines_[cursor_++];
  }

  /// Tokens following `key` on the next line.
  std::vector<std::string_view> fields(std::string_view key) {
    std::string_view line = next_line();
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(' ', start);
      if (end == std::string_view::npos) end = line.size();
      if (end > start) tokens.push_back(line.substr(start, end - start));
      start = end + 1;
    }
    if (tokens.empty() || tokens.front() != key) {
      corrupt("expected '" + std::string(key) + "', found '" + std::string(line) + "'");
    }
    tokens.erase(tokens.begin());
    return tokens;
  }

  std::string_view single(std::string_view key) {
    auto f = fields(key);
    if (f.size() != 1) corrupt("'" + std::string(key) + "' needs exactly one value");
    return f.front();
  }

  template <typename Int>
  static Int integer(std::string_view s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) corrupt("bad integer '" + std::string(s) + "'");
    return v;
  }

  template <typename Int>
  Int integer_field(std::string_view key) {
    return integer<Int>(single(key));
  }

  double real(std::string_view key) { return io::parse_hex_double(single(key)); }

  Eigen::VectorXd reals(std::string_view key, Index expected) {
    auto f = fields(key);
    if (static_cast<Index>(f.size()) != expected) {
      corrupt("'" + std::string(key) + "' has " + std::to_string(f.size()) + " values, expected " +
              std::to_string(expected));
    }
    Eigen::VectorXd v(expected);
    for (Index i = 0; i < expected; ++i) v(i) = io::parse_hex_double(f[static_cast<std::size_t>(i)]);
    return v;
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t cursor_ = 0;
};

std::string_view label_code(Label l) { return l == Label::Positive ? "positive" : "negative"; }

Label parse_binary_label(std::string_view s) {
  auto l = parse_label(s);
  if (!l || *l == Label::Doubtful) corrupt("bad label '" + std::string(s) + "'");
  return *l;
}

}  // namespace

std::string serialize(const TrainedModel& m) {
  Writer w;
  w.line(kMagic);
  w.value("format_version", kModelFormatVersion);
  w.value("model_kind", to_string(m.kind()));
  w.value("feature_names", m.feature_names.size());
  for (const auto& name : m.feature_names) w.line(name);
  w.value("standardizer", m.standardizer ? 1 : 0);
  if (m.standardizer) {
    w.reals("mean", m.standardizer->mean);
    w.reals("scale", m.standardizer->scale);
    std::string flags;
    for (bool z : m.standardizer->zero_variance) flags += z ? " 1" : " 0";
    w.line("zero_variance" + flags);
  }

  std::visit(overloaded{
                 [&](const MnbModel& mm) {
                   w.real("alpha", mm.alpha);
                   w.reals("log_prior", mm.log_prior);
                   w.reals("log_theta_positive", mm.log_theta.row(0));
                   w.reals("log_theta_negative", mm.log_theta.row(1));
                 },
                 [&](const GnbModel& mm) {
                   w.real("epsilon", mm.epsilon);
                   w.reals("log_prior", mm.log_prior);
                   w.reals("mean_positive", mm.mean.row(0));
                   w.reals("mean_negative", mm.mean.row(1));
                   w.reals("variance_positive", mm.variance.row(0));
                   w.reals("variance_negative", mm.variance.row(1));
                 },
                 [&](const KnnModel& mm) {
                   w.value("k", mm.k);
                   w.value("points", mm.points.rows());
                   for (Index i = 0; i < mm.points.rows(); ++i) {
                     w.reals(label_code(mm.labels[static_cast<std::size_t>(i)]), mm.points.row(i));
                   }
                 },
                 [&](const DtModel& mm) {
                   w.value("max_depth", mm.params.max_depth);
                   w.value("min_leaf", mm.params.min_leaf);
                   w.reals("importance", mm.importance);
                   w.value("nodes", mm.nodes.size());
                   for (const DtNode& n : mm.nodes) {
                     std::ostringstream line;
                     line << "node " << n.feature << ' ' << io::format_hex_double(n.threshold) << ' ' << n.left << ' '
                          << n.right << ' ' << label_code(n.prediction) << ' ' << n.counts[0] << ' ' << n.counts[1];
                     w.line(line.str());
                   }
                 },
                 [&](const SvmModel& mm) {
                   w.real("lambda", mm.params.lambda);
                   w.value("epochs", mm.params.epochs);
                   w.value("seed", mm.params.seed);
                   w.real("bias", mm.bias);
                   w.reals("weights", mm.weights);
                 },
                 [&](const MajorityModel& mm) { w.value("label", label_code(mm.label)); },
             },
             m.model);
  w.line("end");
  return w.str();
}

TrainedModel deserialize(std::string_view text) {
  Reader r(text);
  if (r.next_line() != kMagic) corrupt("not a humorkit model file");
  const int version = r.integer_field<int>("format_version");
  if (version != kModelFormatVersion) {
    throw Error(ErrorCode::VersionMismatch, "model format_version " + std::to_string(version) + ", expected " +
                                                std::to_string(kModelFormatVersion));
  }
  const auto kind = parse_model_kind(r.single("model_kind"));
  if (!kind) corrupt("unknown model_kind");

  TrainedModel m;
  const auto n_features = r.integer_field<std::size_t>("feature_names");
  const auto d = static_cast<Index>(n_features);
  for (std::size_t i = 0; i < n_features; ++i) m.feature_names.emplace_back(r.next_line());

  if (r.integer_field<int>("standardizer") == 1) {
    Standardizer s;
    s.mean = r.reals("mean", d);
    s.scale = r.reals("scale", d);
    auto flags = r.fields("zero_variance");
    if (static_cast<Index>(flags.size()) != d) corrupt("zero_variance width mismatch");
    for (auto f : flags) s.zero_variance.push_back(f == "1");
    m.standardizer = std::move(s);
  }

  switch (*kind) {
    case ModelKind::Mnb: {
      MnbModel mm;
      mm.alpha = r.real("alpha");
      mm.log_prior = r.reals("log_prior", 2);
      mm.log_theta.resize(2, d);
      mm.log_theta.row(0) = r.reals("log_theta_positive", d).transpose();
      mm.log_theta.row(1) = r.reals("log_theta_negative", d).transpose();
      m.model = std::move(mm);
      break;
    }
    case ModelKind::Gnb: {
      GnbModel mm;
      mm.epsilon = r.real("epsilon");
      mm.log_prior = r.reals("log_prior", 2);
      mm.mean.resize(2, d);
      mm.variance.resize(2, d);
      mm.mean.row(0) = r.reals("mean_positive", d).transpose();
      mm.mean.row(1) = r.reals("mean_negative", d).transpose();
      mm.variance.row(0) = r.reals("variance_positive", d).transpose();
      mm.variance.row(1) = r.reals("variance_negative", d).transpose();
      m.model = std::move(mm);
      break;
    }
    case ModelKind::Knn: {
      KnnModel mm;
      mm.k = r.integer_field<int>("k");
      const auto n = r.integer_field<Index>("points");
      mm.points.resize(n, d);
      for (Index i = 0; i < n; ++i) {
        std::string_view line = r.next_line();
        const std::size_t space = line.find(' ');
        const std::string_view code = line.substr(0, space == std::string_view::npos ? line.size() : space);
        mm.labels.push_back(parse_binary_label(code));
        Reader row_reader(line);
        mm.points.row(i) = row_reader.reals(code, d).transpose();
      }
      m.model = std::move(mm);
      break;
    }
    case ModelKind::Dt: {
      DtModel mm;
      mm.params.max_depth = r.integer_field<int>("max_depth");
      mm.params.min_leaf = r.integer_field<int>("min_leaf");
      mm.importance = r.reals("importance", d);
      const auto n_nodes = r.integer_field<std::size_t>("nodes");
      for (std::size_t i = 0; i < n_nodes; ++i) {
        auto f = r.fields("node");
        if (f.size() != 7) corrupt("node line needs 7 fields");
        DtNode node;
        node.feature = Reader::integer<int>(f[0]);
        node.threshold = io::parse_hex_double(f[1]);
        node.left = Reader::integer<int>(f[2]);
        node.right = Reader::integer<int>(f[3]);
        node.prediction = parse_binary_label(f[4]);
        node.counts = {Reader::integer<int>(f[5]), Reader::integer<int>(f[6])};
        mm.nodes.push_back(node);
      }
      // children always follow their parent, which also rules out cycles
      const auto limit = static_cast<int>(mm.nodes.size());
      for (int id = 0; id < limit; ++id) {
        const DtNode& node = mm.nodes[static_cast<std::size_t>(id)];
        if (node.is_leaf()) continue;
        if (node.feature >= d || node.left <= id || node.left >= limit || node.right <= id || node.right >= limit) {
          corrupt("tree node references out of range");
        }
      }
      m.model = std::move(mm);
      break;
    }
    case ModelKind::Svm: {
      SvmModel mm;
      mm.params.lambda = r.real("lambda");
      mm.params.epochs = r.integer_field<int>("epochs");
      mm.params.seed = r.integer_field<std::uint64_t>("seed");
      mm.bias = r.real("bias");
      mm.weights = r.reals("weights", d);
      m.model = std::move(mm);
      break;
    }
    case ModelKind::Majority:
      m.model = MajorityModel{parse_binary_label(r.single("label"))};
      break;
  }
  if (r.next_line() != "end") corrupt("missing end marker");
  return m;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  io::atomic_write(path, serialize(model));
}

TrainedModel load_model(const std::filesystem::path& path) { return deserialize(io::read_file(path)); }

}  // namespace humorkit::ml
