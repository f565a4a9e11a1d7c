#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace humorkit::text {

enum class TokenKind { Word, Hashtag, Mention, Url, Punct, Number };

std::string_view to_string(TokenKind kind) noexcept;

/// Half-open byte range into the source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  std::string normalized;  // lowercase with diacritics stripped
  TokenKind kind = TokenKind::Punct;
  Span span;
};

/// Half-open range of token indices.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const noexcept { return begin == end; }
  std::size_t size() const noexcept { return end - begin; }
};

struct TokenizedTweet {
  std::string tweet_id;
  std::vector<Token> tokens;
  std::vector<TokenRange> lines;     // non-empty lines only
  std::vector<TokenRange> segments;  // sentences; never cross a line break
};

/// Rule-based tokenizer for Spanish tweets. URLs, mentions and hashtags are
/// recognized first, then runs of letters become words, runs of ASCII digits
/// numbers, and every remaining non-space code point a single punctuation token.
/// Invalid UTF-8 bytes become one-byte punctuation tokens.
TokenizedTweet tokenize(std::string_view text, std::string tweet_id = {});

std::vector<Token> word_tokens(const TokenizedTweet& t);
std::size_t word_count(const TokenizedTweet& t) noexcept;

/// True iff the word has >= 2 code points, at least one uppercase letter and no lowercase letter.
bool is_all_uppercase(const Token& token);

/// Lowercase + strip diacritics (á -> a, ñ -> n, ü -> u, ...). Non-letters pass through.
std::string normalize(std::string_view word);

/// Lowercase only, keeping accents (used by suffix rules where é vs e matters).
std::string lowercase(std::string_view word);

/// Position of the code point starting at `pos` and its byte length; invalid
/// sequences decode as a single byte with `valid = false`.
struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
  bool valid = false;
};
CodePoint decode_utf8(std::string_view s, std::size_t pos) noexcept;
std::size_t code_point_count(std::string_view s) noexcept;

bool is_letter(char32_t cp) noexcept;
bool is_whitespace(char32_t cp) noexcept;

}  // namespace humorkit::text
