#include "humorkit/text.hpp"

#include <random>

#include "test_util.hpp"

namespace text = humorkit::text;
using text::TokenKind;

namespace {

std::vector<TokenKind> kinds(const text::TokenizedTweet& t) {
  std::vector<TokenKind> out;
  for (const auto& tok : t.tokens) out.push_back(tok.kind);
  return out;
}

std::vector<std::string> surfaces(const text::TokenizedTweet& t) {
  std::vector<std::string> out;
  for (const auto& tok : t.tokens) out.push_back(tok.surface);
  return out;
}

text::Token word(const std::string& s) { return text::tokenize(s).tokens.at(0); }

}  // namespace

TEST(Tokenize, KindsOfAMixedTweet) {
  const auto t = text::tokenize("¡Hola! #chiste http://t.co/x");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"¡", "Hola", "!", "#chiste", "http://t.co/x"}));
  EXPECT_EQ(kinds(t), (std::vector<TokenKind>{TokenKind::Punct, TokenKind::Word, TokenKind::Punct, TokenKind::Hashtag,
                                              TokenKind::Url}));
  EXPECT_EQ(t.tokens[1].normalized, "hola");
}

TEST(Tokenize, DashesArePunctuationOneEach) {
  const auto t = text::tokenize("--- Nada es imposible.");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"-", "-", "-", "Nada", "es", "imposible", "."}));
  EXPECT_EQ(text::word_count(t), 3u);
}

TEST(Tokenize, MentionsNumbersAndSpans) {
  const std::string s = "@pepe tiene 3 años";
  const auto t = text::tokenize(s, "id1");
  EXPECT_EQ(t.tweet_id, "id1");
  EXPECT_EQ(kinds(t), (std::vector<TokenKind>{TokenKind::Mention, TokenKind::Word, TokenKind::Number, TokenKind::Word}));
  for (const auto& tok : t.tokens) EXPECT_EQ(s.substr(tok.span.start, tok.span.size()), tok.surface);
  EXPECT_EQ(t.tokens[3].normalized, "anos");
}

TEST(Tokenize, LinesAndSegments) {
  const auto t = text::tokenize("Hola. ¿Qué tal?\n\nBien");
  ASSERT_EQ(t.lines.size(), 2u);
  ASSERT_EQ(t.segments.size(), 3u);
  EXPECT_EQ(t.tokens[t.segments[1].begin].surface, "¿");
  EXPECT_EQ(t.tokens[t.segments[2].begin].surface, "Bien");
  EXPECT_EQ(t.segments[2].size(), 1u);
}

TEST(Tokenize, EmptyAndWhitespaceOnly) {
  EXPECT_TRUE(text::tokenize("").tokens.empty());
  const auto t = text::tokenize(" \n\t \n");
  EXPECT_TRUE(t.tokens.empty());
  EXPECT_TRUE(t.lines.empty());
  EXPECT_TRUE(t.segments.empty());
}

TEST(Tokenize, InvalidUtf8NeverThrowsAndSpansCover) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    const int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(rng() % 256));
    const auto t = text::tokenize(s);
    std::size_t prev = 0;
    for (const auto& tok : t.tokens) {
      ASSERT_GE(tok.span.start, prev);
      ASSERT_LE(tok.span.end, s.size());
      ASSERT_EQ(s.substr(tok.span.start, tok.span.size()), tok.surface);
      prev = tok.span.end;
    }
  }
}

TEST(Uppercase, Rules) {
  EXPECT_TRUE(text::is_all_uppercase(word("JAJAJA")));
  EXPECT_FALSE(text::is_all_uppercase(word("Jaja")));
  EXPECT_FALSE(text::is_all_uppercase(word("A")));
  EXPECT_TRUE(text::is_all_uppercase(word("ÑANDÚ")));
}

TEST(Normalize, StripsDiacriticsAndLowercases) {
  EXPECT_EQ(text::normalize("ÁrBol"), "arbol");
  EXPECT_EQ(text::normalize("pingüino"), "pinguino");
  EXPECT_EQ(text::normalize("Niño"), "nino");
  EXPECT_EQ(text::lowercase("TOCÁTE"), "tocáte");
}

TEST(Utf8, DecodeAndCount) {
  const std::string s = "añ€";
  EXPECT_EQ(text::code_point_count(s), 3u);
  const auto cp = text::decode_utf8(s, 1);
  EXPECT_TRUE(cp.valid);
  EXPECT_EQ(cp.value, U'ñ');
  EXPECT_EQ(cp.length, 2u);
  const auto bad = text::decode_utf8("\xC3", 0);
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.length, 1u);
}
