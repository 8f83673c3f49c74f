#include <array>
#include <string>
#include <string_view>

#include "topicmetrics/text.hpp"

namespace topicmetrics {
namespace {

// Working state for one word. `end` is one past the last character of the
// current stem; `stem_end` marks where a matched suffix begins.
class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word), end_(word.size()) {}

  std::string run() {
    if (end_ <= 2) return b_;
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_.substr(0, end_);
  }

 private:
  bool consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, stem_end).
  int measure(std::size_t stem_end) const {
    int m = 0;
    std::size_t i = 0;
    while (i < stem_end && consonant(i)) ++i;
    while (i < stem_end) {
      while (i < stem_end && !consonant(i)) ++i;
      if (i >= stem_end) break;
      while (i < stem_end && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t stem_end) const {
    for (std::size_t i = 0; i < stem_end; ++i) {
      if (!consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t stem_end) const {
    if (stem_end < 2) return false;
    return b_[stem_end - 1] == b_[stem_end - 2] && consonant(stem_end - 1);
  }

  // *o: stem ends cvc and the final c is not w, x or y.
  bool cvc(std::size_t stem_end) const {
    if (stem_end < 3) return false;
    const std::size_t i = stem_end - 1;
    if (!consonant(i) || consonant(i - 1) || !consonant(i - 2)) return false;
    const char c = b_[i];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends_with(std::string_view suffix) const {
    if (suffix.size() > end_) return false;
    return std::string_view(b_).substr(end_ - suffix.size(), suffix.size()) == suffix;
  }

  void replace_suffix(std::size_t suffix_len, std::string_view with) {
    b_.resize(end_ - suffix_len);
    b_ += with;
    end_ = b_.size();
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // Longest matching suffix wins; if its condition fails nothing happens.
  template <std::size_t N>
  void apply_rules(const std::array<Rule, N>& rules, int min_measure) {
    const Rule* best = nullptr;
    for (const auto& r : rules) {
      if (ends_with(r.suffix) && (best == nullptr || r.suffix.size() > best->suffix.size())) {
        best = &r;
      }
    }
    if (best == nullptr) return;
    if (measure(end_ - best->suffix.size()) > min_measure) {
      replace_suffix(best->suffix.size(), best->replacement);
    }
  }

  void step1a() {
    if (ends_with("sses")) {
      replace_suffix(4, "ss");
    } else if (ends_with("ies")) {
      replace_suffix(3, "i");
    } else if (ends_with("ss")) {
      // unchanged
    } else if (ends_with("s")) {
      replace_suffix(1, "");
    }
  }

  void step1b() {
    if (ends_with("eed")) {
      if (measure(end_ - 3) > 0) replace_suffix(3, "ee");
      return;
    }
    bool removed = false;
    if (ends_with("ed") && has_vowel(end_ - 2)) {
      replace_suffix(2, "");
      removed = true;
    } else if (ends_with("ing") && has_vowel(end_ - 3)) {
      replace_suffix(3, "");
      removed = true;
    }
    if (!removed) return;
    if (ends_with("at")) {
      replace_suffix(2, "ate");
    } else if (ends_with("bl")) {
      replace_suffix(2, "ble");
    } else if (ends_with("iz")) {
      replace_suffix(2, "ize");
    } else if (double_consonant(end_)) {
      const char c = b_[end_ - 1];
      if (c != 'l' && c != 's' && c != 'z') replace_suffix(1, "");
    } else if (measure(end_) == 1 && cvc(end_)) {
      replace_suffix(0, "e");
    }
  }

  void step1c() {
    if (ends_with("y") && has_vowel(end_ - 1)) replace_suffix(1, "i");
  }

  void step2() {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_rules(rules, 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"},
        {"ative", ""},
        {"alize", "al"},
        {"iciti", "ic"},
        {"ical", "ic"},
        {"ful", ""},
        {"ness", ""},
    }};
    apply_rules(rules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (auto s : suffixes) {
      if (ends_with(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t stem_end = end_ - best.size();
    if (best == "ion") {
      if (stem_end == 0 || (b_[stem_end - 1] != 's' && b_[stem_end - 1] != 't')) return;
    }
    if (measure(stem_end) > 1) replace_suffix(best.size(), "");
  }

  void step5() {
    if (ends_with("e")) {
      const int m = measure(end_ - 1);
      if (m > 1 || (m == 1 && !cvc(end_ - 1))) replace_suffix(1, "");
    }
    if (end_ >= 2 && b_[end_ - 1] == 'l' && double_consonant(end_) && measure(end_) > 1) {
      replace_suffix(1, "");
    }
  }

  std::string b_;
  std::size_t end_;
};

}  // namespace

std::string porter_stem(std::string_view word) { return Stemmer(word).run(); }

}  // namespace topicmetrics
