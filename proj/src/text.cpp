#include <fstream>
#include <string>

#include "topicmetrics/error.hpp"
#include "topicmetrics/text.hpp"

namespace topicmetrics {
namespace detail {
const std::vector<std::string_view>& default_stopword_entries();
}

namespace text {

bool is_emoji(char32_t c) {
  // Pictographic blocks plus a range table standing in for the Unicode
  // So/Sk categories, and the joiners that glue emoji sequences together.
  return (c >= 0x1F000 && c <= 0x1FAFF) ||  // pictographs, flags, skin tones
         (c >= 0x2600 && c <= 0x27BF) ||    // misc symbols, dingbats
         c == 0xFE0F || c == 0xFE0E || c == 0x200D || c == 0x20E3 ||
         (c >= 0xE0020 && c <= 0xE007F) ||  // tag sequences
         (c >= 0x2190 && c <= 0x21FF) ||    // arrows
         (c >= 0x2300 && c <= 0x23FF) ||    // misc technical
         (c >= 0x2400 && c <= 0x24FF) ||    // control pictures, enclosed alnum
         (c >= 0x2500 && c <= 0x25FF) ||    // box drawing, geometric shapes
         (c >= 0x2B00 && c <= 0x2BFF) ||    // misc symbols and arrows
         (c >= 0x3200 && c <= 0x32FF) ||    // enclosed CJK
         (c >= 0x02C2 && c <= 0x02C5) || (c >= 0x02D2 && c <= 0x02DF) ||  // Sk
         (c >= 0x02E5 && c <= 0x02EB) || c == 0x02ED || (c >= 0x02EF && c <= 0x02FF);
}

bool is_punctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  return (c >= 0x00A1 && c <= 0x00BF) || c == 0x00D7 || c == 0x00F7 ||
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x303F) || (c >= 0xFF01 && c <= 0xFF0F);
}

bool is_digit(char32_t c) { return (c >= U'0' && c <= U'9') || (c >= 0xFF10 && c <= 0xFF19); }

bool is_whitespace(char32_t c) {
  return c == U' ' || (c >= 0x09 && c <= 0x0D) || c == 0x00A0 || (c >= 0x2000 && c <= 0x200B) ||
         c == 0x2028 || c == 0x2029 || c == 0x3000 || c == 0xFEFF;
}

bool is_upper(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) ||
         (c >= 0x0391 && c <= 0x03A9 && c != 0x03A2) || (c >= 0x0400 && c <= 0x042F);
}

char32_t to_lower(char32_t c) {
  if (!is_upper(c)) return c;
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
  return c + 0x20;
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) break;
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

}  // namespace text

namespace {

// Splits and filters characters; no stopword or stemming logic.
std::vector<std::string> clean_tokens(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  bool has_word_char = false;
  auto flush = [&] {
    if (has_word_char) tokens.push_back(current);
    current.clear();
    has_word_char = false;
  };
  for (char32_t c : text::decode_utf8(raw)) {
    if (text::is_whitespace(c)) {
      flush();
      continue;
    }
    if (text::is_digit(c) || text::is_emoji(c)) continue;
    if (c < 0x20 || c == 0x7F) continue;
    if (text::is_punctuation(c)) {
      if ((c == U'#' || c == U'@') && current.empty()) current.push_back(static_cast<char>(c));
      continue;
    }
    text::append_utf8(current, text::to_lower(c));
    has_word_char = true;
  }
  flush();
  return tokens;
}

bool has_prefix_marker(const std::string& token) {
  return !token.empty() && (token.front() == '#' || token.front() == '@');
}

}  // namespace

std::vector<std::string> preprocess_text(std::string_view raw, const PreprocessOptions& options) {
  std::vector<std::string> out;
  for (auto& token : clean_tokens(raw)) {
    if (options.stopwords.contains(token)) continue;
    if (options.stem) {
      if (has_prefix_marker(token)) {
        token = token.substr(0, 1) + porter_stem(std::string_view(token).substr(1));
      } else {
        token = porter_stem(token);
      }
      // A stem can collide with a stopword ("doing" -> "do").
      if (options.stopwords.contains(token)) continue;
    }
    out.push_back(std::move(token));
  }
  return out;
}

namespace {

void add_stopword(StopwordSet& set, std::string_view entry) {
  for (auto& t : clean_tokens(entry)) set.insert(std::move(t));
}

}  // namespace

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read stopword file " + path.string());
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) add_stopword(set, line);
  return set;
}

StopwordSet default_stopwords() {
  StopwordSet set;
  for (auto w : detail::default_stopword_entries()) add_stopword(set, w);
  return set;
}

}  // namespace topicmetrics
