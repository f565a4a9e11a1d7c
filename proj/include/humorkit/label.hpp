#pragma once

#include <optional>
#include <string_view>

namespace humorkit {

/// Aggregated class of a tweet. Datasets only ever carry Positive/Negative.
enum class Label { Positive, Negative, Doubtful };

constexpr std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::Positive: return "positive";
    case Label::Negative: return "negative";
    case Label::Doubtful: return "doubtful";
  }
  return "doubtful";
}

constexpr std::optional<Label> parse_label(std::string_view s) noexcept {
  if (s == "positive") return Label::Positive;
  if (s == "negative") return Label::Negative;
  if (s == "doubtful") return Label::Doubtful;
  return std::nullopt;
}

}  // namespace humorkit
