#include "humorkit/error.hpp"

namespace humorkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownTweetId: return "UnknownTweetId";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NoEligibleItems: return "NoEligibleItems";
    case ErrorCode::InvalidRaterCount: return "InvalidRaterCount";
    case ErrorCode::DoubtfulPresent: return "DoubtfulPresent";
    case ErrorCode::MissingDictionary: return "MissingDictionary";
    case ErrorCode::MissingResource: return "MissingResource";
    case ErrorCode::UntrainedModel: return "UntrainedModel";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::NegativeFeatureValue: return "NegativeFeatureValue";
    case ErrorCode::ClassTooSmall: return "ClassTooSmall";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::InvalidHyperparameter: return "InvalidHyperparameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CorruptModel: return "CorruptModel";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedVote: return "MalformedVote";
    case ErrorCode::Exhausted: return "Exhausted";
  }
  return "Unknown";
}

}  // namespace humorkit
