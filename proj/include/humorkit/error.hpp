#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace humorkit {

enum class ErrorCode {
  IoFailure,
  MalformedRecord,
  DuplicateId,
  UnknownTweetId,
  InvalidConfig,
  NoEligibleItems,
  InvalidRaterCount,
  DoubtfulPresent,
  MissingDictionary,
  MissingResource,
  UntrainedModel,
  EmptyDataset,
  EmptyCorpus,
  NegativeFeatureValue,
  ClassTooSmall,
  KTooLarge,
  InvalidHyperparameter,
  DimensionMismatch,
  VersionMismatch,
  CorruptModel,
  LengthMismatch,
  MalformedVote,
  Exhausted,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace humorkit
