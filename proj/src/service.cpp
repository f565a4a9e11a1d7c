#include "humorkit/service.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include <httplib.h>
#include <json.hpp>

#include "humorkit/error.hpp"

namespace humorkit::service {

using corpus::Annotation;
using corpus::Tweet;
using corpus::Vote;
using json = nlohmann::json;

namespace {

std::int64_t wall_clock_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

AnnotationService::AnnotationService(std::vector<Tweet> pool, std::filesystem::path annotations_path,
                                     std::uint64_t seed, Clock clock)
    : pool_(std::move(pool)), path_(std::move(annotations_path)), clock_(std::move(clock)), rng_(seed) {
  if (!clock_) clock_ = wall_clock_ms;
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (!index_.emplace(pool_[i].id, i).second) throw Error(ErrorCode::DuplicateId, "tweet '" + pool_[i].id + "'");
  }
  if (std::filesystem::exists(path_)) {
    for (const auto& a : corpus::load_annotations(path_)) {
      ++stats_.by_category[a.vote.category()];
      ++stats_.total;
    }
  } else if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw Error(ErrorCode::IoFailure, path_.string() + ": " + std::strerror(errno));
}

AnnotationService::~AnnotationService() {
  if (fd_ >= 0) ::close(fd_);
}

const Tweet& AnnotationService::get_random_tweet(const std::string& session_id) {
  std::lock_guard lock(session_mutex_);
  auto& served = served_[session_id];
  if (served.size() >= pool_.size()) throw Error(ErrorCode::Exhausted, "session '" + session_id + "' has seen every tweet");
  std::vector<std::size_t> unseen;
  unseen.reserve(pool_.size() - served.size());
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (!served.count(i)) unseen.push_back(i);
  }
  const std::size_t pick = unseen[static_cast<std::size_t>(rng_.uniform_index(unseen.size()))];
  served.insert(pick);
  return pool_[pick];
}

Annotation AnnotationService::post_annotation(const std::string& session_id, const std::string& tweet_id,
                                              const std::string& vote) {
  if (!index_.count(tweet_id)) throw Error(ErrorCode::UnknownTweetId, "'" + tweet_id + "'");
  const auto parsed = Vote::parse(vote);
  if (!parsed) throw Error(ErrorCode::MalformedVote, "'" + vote + "'");

  Annotation a;
  a.tweet_id = tweet_id;
  a.session_id = session_id;
  a.vote = *parsed;

  std::lock_guard lock(write_mutex_);
  a.timestamp_ms = clock_();
  const std::string line = corpus::to_json_line(a) + "\n";
  // One write() per record on an O_APPEND descriptor keeps records whole.
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd_, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::IoFailure, path_.string() + ": " + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
  ++stats_.by_category[a.vote.category()];
  ++stats_.total;
  return a;
}

Stats AnnotationService::get_stats() const {
  std::lock_guard lock(write_mutex_);
  return stats_;
}

// ---- HTTP -----------------------------------------------------------------

struct HttpServer::Impl {
  AnnotationService& service;
  ServerOptions options;
  httplib::Server server;

  Impl(AnnotationService& s, ServerOptions o) : service(s), options(std::move(o)) { routes(); }

  static void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static void send_error(httplib::Response& res, int status, const std::string& message) {
    send_json(res, status, {{"error", message}});
  }

  void routes() {
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, {{"status", "ok"}});
    });

    server.Get("/api/tweet/random", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string session = req.get_param_value("session");
      if (session.empty()) return send_error(res, 400, "missing session parameter");
      try {
        const Tweet& t = service.get_random_tweet(session);
        send_json(res, 200, {{"id", t.id}, {"text", t.text}});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Exhausted) throw;
        send_error(res, 410, "exhausted");
      }
    });

    server.Post("/api/annotation", [this](const httplib::Request& req, httplib::Response& res) {
      const json body = json::parse(req.body, nullptr, false);
      if (!body.is_object() || !body.contains("session") || !body["session"].is_string() ||
          !body.contains("tweet_id") || !body["tweet_id"].is_string() || !body.contains("vote") ||
          !body["vote"].is_string()) {
        return send_error(res, 400, "expected {session, tweet_id, vote} strings");
      }
      try {
        const Annotation a = service.post_annotation(body["session"], body["tweet_id"], body["vote"]);
        send_json(res, 201, json::parse(corpus::to_json_line(a)));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownTweetId) return send_error(res, 404, e.what());
        if (e.code() == ErrorCode::MalformedVote) return send_error(res, 400, e.what());
        throw;
      }
    });

    server.Get("/api/stats", [this](const httplib::Request&, httplib::Response& res) {
      const Stats s = service.get_stats();
      json counts = json::object();
      for (std::size_t c = 0; c < corpus::kVoteCategories; ++c) {
        counts[std::string(corpus::vote_category_name(c))] = s.by_category[c];
      }
      send_json(res, 200, {{"counts", counts}, {"total", s.total}});
    });

    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string message = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        message = e.what();
      } catch (...) {
      }
      send_error(res, 500, message);
    });

    if (!options.static_dir.empty()) {
      if (!std::filesystem::is_directory(options.static_dir)) {
        throw Error(ErrorCode::MissingResource, "static directory " + options.static_dir.string());
      }
      server.set_mount_point("/", options.static_dir.string());
    }
  }

  int bind() {
    int port = options.port;
    if (port == 0) {
      port = server.bind_to_any_port(options.host);
    } else if (!server.bind_to_port(options.host, port)) {
      port = -1;
    }
    if (port < 0) {
      throw Error(ErrorCode::IoFailure, "cannot bind " + options.host + ":" + std::to_string(options.port));
    }
    return port;
  }
};

HttpServer::HttpServer(AnnotationService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start() {
  port_ = impl_->bind();
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port_;
}

void HttpServer::run() {
  port_ = impl_->bind();
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace humorkit::service
