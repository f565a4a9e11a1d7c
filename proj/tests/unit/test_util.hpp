#pragma once

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "humorkit/error.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                                   \
  do {                                                                      \
    try {                                                                   \
      stmt;                                                                 \
      ADD_FAILURE() << "expected " << humorkit::to_string(expected);        \
    } catch (const humorkit::Error& e) {                                    \
      EXPECT_EQ(e.code(), expected) << e.what();                            \
    }                                                                       \
  } while (0)

namespace testutil {

inline const std::filesystem::path kDataDir = HUMORKIT_TEST_DATA_DIR;

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("humorkit-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace testutil
