#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "humorkit/corpus.hpp"
#include "humorkit/random.hpp"

namespace humorkit::service {

struct Stats {
  std::array<std::size_t, corpus::kVoteCategories> by_category{};
  std::size_t total = 0;
};

/// Random-tweet dispenser and vote recorder behind the annotation page.
/// All members are safe to call from concurrent request handlers.
class AnnotationService {
 public:
  using Clock = std::function<std::int64_t()>;  // milliseconds since the epoch

  /// Existing records in `annotations_path` seed the stats counters.
  AnnotationService(std::vector<corpus::Tweet> pool, std::filesystem::path annotations_path, std::uint64_t seed,
                    Clock clock = {});
  ~AnnotationService();

  AnnotationService(const AnnotationService&) = delete;
  AnnotationService& operator=(const AnnotationService&) = delete;

  /// Uniform over the tweets not yet served to this session. Throws Exhausted.
  const corpus::Tweet& get_random_tweet(const std::string& session_id);

  /// Appends one record. Throws UnknownTweetId or MalformedVote; the file is untouched on error.
  corpus::Annotation post_annotation(const std::string& session_id, const std::string& tweet_id,
                                     const std::string& vote);

  Stats get_stats() const;

  std::size_t pool_size() const noexcept { return pool_.size(); }
  const std::filesystem::path& annotations_path() const noexcept { return path_; }

 private:
  std::vector<corpus::Tweet> pool_;
  std::unordered_map<std::string, std::size_t> index_;
  std::filesystem::path path_;
  Clock clock_;
  int fd_ = -1;

  mutable std::mutex session_mutex_;
  std::unordered_map<std::string, std::set<std::size_t>> served_;
  Rng rng_;

  mutable std::mutex write_mutex_;
  Stats stats_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path static_dir;
};

/// HTTP front end. GET /api/tweet/random?session=S, POST /api/annotation,
/// GET /api/stats, GET /healthz, static files at /.
class HttpServer {
 public:
  HttpServer(AnnotationService& service, ServerOptions options);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread; returns the bound port.
  int start();
  /// Binds and serves on the calling thread until stop().
  void run();
  void stop();

  int port() const noexcept { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace humorkit::service
