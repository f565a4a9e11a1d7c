#include "humorkit/text.hpp"

#include <array>
#include <string_view>

namespace humorkit::text {

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Hashtag: return "hashtag";
    case TokenKind::Mention: return "mention";
    case TokenKind::Url: return "url";
    case TokenKind::Punct: return "punct";
    case TokenKind::Number: return "number";
  }
  return "punct";
}

// ---- UTF-8 ----------------------------------------------------------------

CodePoint decode_utf8(std::string_view s, std::size_t pos) noexcept {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1, true};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    return {0xFFFD, 1, false};
  }
  if (pos + len > s.size()) return {0xFFFD, 1, false};
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) return {0xFFFD, 1, false};
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {0xFFFD, 1, false};
  return {cp, len, true};
}

std::size_t code_point_count(std::string_view s) noexcept {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < s.size(); pos += decode_utf8(s, pos).length) ++n;
  return n;
}

namespace {

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Latin Extended-A alternates case within pairs; which member is uppercase
// flips at U+0138 and again at U+0178.
bool ext_a_upper(char32_t cp) noexcept {
  if (cp >= 0x0100 && cp <= 0x0137) return cp % 2 == 0;
  if (cp >= 0x0139 && cp <= 0x0148) return cp % 2 == 1;
  if (cp >= 0x014A && cp <= 0x0177) return cp % 2 == 0;
  if (cp == 0x0178) return true;
  if (cp >= 0x0179 && cp <= 0x017E) return cp % 2 == 1;
  return false;
}

bool ext_a_lower(char32_t cp) noexcept {
  if (cp == 0x0138 || cp == 0x0149 || cp == 0x017F) return true;
  if (cp >= 0x0100 && cp <= 0x017E && cp != 0x0178) return !ext_a_upper(cp);
  return false;
}

bool is_upper(char32_t cp) noexcept {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  return ext_a_upper(cp);
}

bool is_lower(char32_t cp) noexcept {
  if (cp >= 'a' && cp <= 'z') return true;
  if (cp >= 0xDF && cp <= 0xFF && cp != 0xF7) return true;
  return ext_a_lower(cp);
}

char32_t to_lower(char32_t cp) noexcept {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x0178) return 0xFF;
  if (ext_a_upper(cp)) return cp + 1;
  return cp;
}

// Base letter for U+0100..U+017F, indexed from U+0100.
constexpr std::string_view kExtABase =
    "aaaaaaccccccccddddeeeeeeeeeegggggggghhhhiiiiiiiiiiiijjkkklllllllllln"
    "nnnnnnnnoooooooorrrrrrsssssssstttttt"
    "uuuuuuuuuuuuwwyyyzzzzzzs";
static_assert(kExtABase.size() == 128);

// Base form of a lowercase Latin-1 letter U+00DF..U+00FF.
std::string_view latin1_base(char32_t cp) noexcept {
  switch (cp) {
    case 0xDF: return "ss";
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: return "a";
    case 0xE6: return "ae";
    case 0xE7: return "c";
    case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
    case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
    case 0xF0: return "d";
    case 0xF1: return "n";
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8: return "o";
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
    case 0xFD: case 0xFF: return "y";
    case 0xFE: return "th";
    default: return {};
  }
}

bool is_ascii_digit(char32_t cp) noexcept { return cp >= '0' && cp <= '9'; }

bool is_sentence_final(std::string_view surface) noexcept {
  return surface == "." || surface == "!" || surface == "?" || surface == "…";
}

bool starts_with_url_scheme(std::string_view s, std::size_t pos) noexcept {
  auto matches = [&](std::string_view scheme) {
    if (pos + scheme.size() > s.size()) return false;
    for (std::size_t i = 0; i < scheme.size(); ++i) {
      char c = s[pos + i];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 0x20);
      if (c != scheme[i]) return false;
    }
    return true;
  };
  return matches("http://") || matches("https://");
}

bool is_mention_char(char32_t cp) noexcept {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || is_ascii_digit(cp) || cp == '_';
}

bool is_hashtag_char(char32_t cp) noexcept { return is_letter(cp) || is_ascii_digit(cp) || cp == '_'; }

}  // namespace

bool is_letter(char32_t cp) noexcept {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  return cp >= 0x0100 && cp <= 0x024F;
}

bool is_whitespace(char32_t cp) noexcept {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::string lowercase(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) {
    const CodePoint cp = decode_utf8(word, pos);
    if (cp.valid) {
      append_utf8(out, to_lower(cp.value));
    } else {
      out += word[pos];
    }
    pos += cp.length;
  }
  return out;
}

std::string normalize(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) {
    const CodePoint cp = decode_utf8(word, pos);
    pos += cp.length;
    if (!cp.valid) {
      out += word[pos - 1];
      continue;
    }
    const char32_t lower = to_lower(cp.value);
    if (lower >= 0xDF && lower <= 0xFF) {
      const auto base = latin1_base(lower);
      if (!base.empty()) {
        out += base;
        continue;
      }
    } else if (lower >= 0x0100 && lower <= 0x017F) {
      out += kExtABase[lower - 0x0100];
      continue;
    }
    append_utf8(out, lower);
  }
  return out;
}

// ---- tokenizer ------------------------------------------------------------

TokenizedTweet tokenize(std::string_view text, std::string tweet_id) {
  TokenizedTweet out;
  out.tweet_id = std::move(tweet_id);

  std::vector<std::size_t> token_line;
  std::size_t line = 0;
  std::size_t pos = 0;

  auto emit = [&](TokenKind kind, std::size_t start, std::size_t end) {
    Token tok;
    tok.surface = std::string(text.substr(start, end - start));
    tok.kind = kind;
    tok.span = {start, end};
    switch (kind) {
      case TokenKind::Word:
      case TokenKind::Hashtag:
      case TokenKind::Mention:
        tok.normalized = normalize(tok.surface);
        break;
      default:
        tok.normalized = tok.surface;
        break;
    }
    out.tokens.push_back(std::move(tok));
    token_line.push_back(line);
  };

  // Advances over code points satisfying `pred`, returning the end offset.
  auto scan_while = [&](std::size_t from, auto pred) {
    while (from < text.size()) {
      const CodePoint cp = decode_utf8(text, from);
      if (!cp.valid || !pred(cp.value)) break;
      from += cp.length;
    }
    return from;
  };

  while (pos < text.size()) {
    const CodePoint cp = decode_utf8(text, pos);
    if (cp.valid && is_whitespace(cp.value)) {
      if (cp.value == '\n') ++line;
      pos += cp.length;
      continue;
    }
    if (starts_with_url_scheme(text, pos)) {
      std::size_t stop = pos;
      while (stop < text.size()) {
        const CodePoint next = decode_utf8(text, stop);
        if (next.valid && is_whitespace(next.value)) break;
        stop += next.length;
      }
      emit(TokenKind::Url, pos, stop);
      pos = stop;
      continue;
    }
    if (cp.value == '#' || cp.value == '@') {
      const bool hashtag = cp.value == '#';
      const std::size_t end = hashtag ? scan_while(pos + 1, is_hashtag_char) : scan_while(pos + 1, is_mention_char);
      if (end > pos + 1) {
        emit(hashtag ? TokenKind::Hashtag : TokenKind::Mention, pos, end);
        pos = end;
        continue;
      }
    }
    if (cp.valid && is_letter(cp.value)) {
      const std::size_t end = scan_while(pos, is_letter);
      emit(TokenKind::Word, pos, end);
      pos = end;
      continue;
    }
    if (cp.valid && is_ascii_digit(cp.value)) {
      const std::size_t end = scan_while(pos, is_ascii_digit);
      emit(TokenKind::Number, pos, end);
      pos = end;
      continue;
    }
    emit(TokenKind::Punct, pos, pos + cp.length);
    pos += cp.length;
  }

  const std::size_t n = out.tokens.size();
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && token_line[j] == token_line[i]) ++j;
    out.lines.push_back({i, j});
    i = j;
  }

  std::size_t seg_start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    bool boundary = i == n;
    if (!boundary) {
      const bool prev_final = out.tokens[i - 1].kind == TokenKind::Punct && is_sentence_final(out.tokens[i - 1].surface);
      const bool cur_final = out.tokens[i].kind == TokenKind::Punct && is_sentence_final(out.tokens[i].surface);
      boundary = token_line[i] != token_line[i - 1] || (prev_final && !cur_final);
    }
    if (boundary && n > 0) {
      out.segments.push_back({seg_start, i});
      seg_start = i;
    }
  }
  return out;
}

std::vector<Token> word_tokens(const TokenizedTweet& t) {
  std::vector<Token> words;
  for (const auto& tok : t.tokens) {
    if (tok.kind == TokenKind::Word) words.push_back(tok);
  }
  return words;
}

std::size_t word_count(const TokenizedTweet& t) noexcept {
  std::size_t n = 0;
  for (const auto& tok : t.tokens) n += tok.kind == TokenKind::Word;
  return n;
}

bool is_all_uppercase(const Token& token) {
  std::size_t length = 0;
  bool any_upper = false;
  for (std::size_t pos = 0; pos < token.surface.size();) {
    const CodePoint cp = decode_utf8(token.surface, pos);
    pos += cp.length;
    ++length;
    if (!cp.valid) continue;
    if (is_lower(cp.value)) return false;
    any_upper = any_upper || is_upper(cp.value);
  }
  return length >= 2 && any_upper;
}

}  // namespace humorkit::text
