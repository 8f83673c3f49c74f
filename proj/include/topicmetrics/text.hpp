#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace topicmetrics {

using StopwordSet = std::unordered_set<std::string>;

struct PreprocessOptions {
  bool stem = true;
  StopwordSet stopwords;
};

/// Porter (1980) suffix stripping. Expects a lowercase word; words shorter
/// than three characters are returned unchanged.
std::string porter_stem(std::string_view word);

/// Lowercase, strip digits/punctuation/emoji, split on whitespace, drop
/// stopwords, then optionally stem. '#' and '@' survive only as the first
/// character of a token.
std::vector<std::string> preprocess_text(std::string_view raw, const PreprocessOptions& options);

/// Stopword file: one token per line. Entries are passed through the same
/// character filter as corpus text so "don't" matches the token "dont".
StopwordSet load_stopwords(const std::filesystem::path& path);

/// The bundled English list (data/stopwords_en.txt).
StopwordSet default_stopwords();

namespace text {

bool is_emoji(char32_t c);
bool is_punctuation(char32_t c);
bool is_digit(char32_t c);
bool is_whitespace(char32_t c);
char32_t to_lower(char32_t c);
bool is_upper(char32_t c);

/// Decodes UTF-8, skipping malformed bytes.
std::u32string decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t c);

}  // namespace text
}  // namespace topicmetrics
