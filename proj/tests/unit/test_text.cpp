#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "topicmetrics/random.hpp"
#include "topicmetrics/text.hpp"

using namespace topicmetrics;

namespace {

PreprocessOptions defaults(bool stem = true) {
  PreprocessOptions o;
  o.stem = stem;
  o.stopwords = default_stopwords();
  return o;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("porter stemmer matches the published rule examples") {
  // Word pairs from the original algorithm description, step by step.
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"caresses", "caress"},     {"ponies", "poni"},          {"ties", "ti"},
      {"caress", "caress"},       {"cats", "cat"},             {"feed", "feed"},
      {"agreed", "agre"},         {"plastered", "plaster"},    {"bled", "bled"},
      {"motoring", "motor"},      {"sing", "sing"},            {"conflated", "conflat"},
      {"troubled", "troubl"},     {"sized", "size"},           {"hopping", "hop"},
      {"tanned", "tan"},          {"falling", "fall"},         {"hissing", "hiss"},
      {"fizzed", "fizz"},         {"failing", "fail"},         {"filing", "file"},
      {"happy", "happi"},         {"sky", "sky"},              {"relational", "relat"},
      {"conditional", "condit"},  {"rational", "ration"},      {"valenci", "valenc"},
      {"hesitanci", "hesit"},     {"digitizer", "digit"},      {"conformabli", "conform"},
      {"radicalli", "radic"},     {"differentli", "differ"},   {"vileli", "vile"},
      {"analogousli", "analog"},  {"vietnamization", "vietnam"}, {"predication", "predic"},
      {"operator", "oper"},       {"feudalism", "feudal"},     {"decisiveness", "decis"},
      {"hopefulness", "hope"},    {"callousness", "callous"},  {"formaliti", "formal"},
      {"sensitiviti", "sensit"},  {"sensibiliti", "sensibl"},  {"triplicate", "triplic"},
      {"formative", "form"},      {"formalize", "formal"},     {"electriciti", "electr"},
      {"electrical", "electr"},   {"hopeful", "hope"},         {"goodness", "good"},
      {"revival", "reviv"},       {"allowance", "allow"},      {"inference", "infer"},
      {"airliner", "airlin"},     {"gyroscopic", "gyroscop"},  {"adjustable", "adjust"},
      {"defensible", "defens"},   {"irritant", "irrit"},       {"replacement", "replac"},
      {"adjustment", "adjust"},   {"dependent", "depend"},     {"adoption", "adopt"},
      {"homologou", "homolog"},   {"communism", "commun"},     {"activate", "activ"},
      {"angulariti", "angular"},  {"homologous", "homolog"},   {"effective", "effect"},
      {"bowdlerize", "bowdler"},  {"probate", "probat"},       {"rate", "rate"},
      {"cease", "ceas"},          {"controll", "control"},     {"roll", "roll"},
      {"generalizations", "gener"}, {"oscillators", "oscil"},  {"judge", "judg"},
  };
  for (const auto& [word, stem] : cases) {
    CAPTURE(word);
    CHECK(porter_stem(word) == stem);
  }
  CHECK(porter_stem("as") == "as");
  CHECK(porter_stem("") == "");
}

TEST_CASE("preprocess_text examples") {
  CHECK(preprocess_text("Judge Kavanaugh, 2018!!", defaults()) == Strings{"judg", "kavanaugh"});
  CHECK(preprocess_text("The THE the", defaults()).empty());
  CHECK(preprocess_text("#prolife rally \xF0\x9F\x87\xBA\xF0\x9F\x87\xB8", defaults(false)) ==
        Strings{"#prolife", "rally"});
  CHECK(preprocess_text("", defaults()).empty());
}

TEST_CASE("hashtags and mentions keep only a leading marker") {
  const auto o = defaults(false);
  CHECK(preprocess_text("@Senator said#so", o) == Strings{"@senator", "saidso"});
  CHECK(preprocess_text("##double @ # #", o) == Strings{"#double"});
  CHECK(preprocess_text("\"#quoted\"", o) == Strings{"#quoted"});
  CHECK(preprocess_text("#Voting", defaults(true)) == Strings{"#vote"});
}

TEST_CASE("apostrophes are stripped before the stopword check") {
  CHECK(preprocess_text("I don't KNOW", defaults()) == Strings{"know"});
}

TEST_CASE("emoji and symbols are removed, accented letters kept") {
  const auto o = defaults(false);
  CHECK(preprocess_text("vote\xE2\x9C\x85 now\xF0\x9F\x98\x80\xEF\xB8\x8F", o) == Strings{"vote"});
  CHECK(preprocess_text("Caf\xC3\x89 \xE2\x86\x92 ok", o) == Strings{"caf\xC3\xA9", "ok"});
}

TEST_CASE("stemmed tokens are checked against the stopword list again") {
  PreprocessOptions o;
  o.stopwords = {"hop"};
  CHECK(preprocess_text("hopping hops", o).empty());
}

TEST_CASE("token invariants hold on random ASCII and emoji input") {
  const std::vector<std::string> pieces = {"a", "B", "z", "Q", "e", "s", "ing", "ed", "7", "0", ",", ".", "!", "'",
                                           "-", "#", "@", " ", " ", "\t", "\n", "the", "THE", "And",
                                           "\xF0\x9F\x98\x80", "\xE2\x9C\x85", "\xF0\x9F\x87\xBA"};
  const auto o = defaults();
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string raw;
    const auto len = rng.index(30);
    for (std::uint64_t i = 0; i < len; ++i) raw += pieces[rng.index(pieces.size())];
    for (const auto& tok : preprocess_text(raw, o)) {
      CAPTURE(raw);
      CAPTURE(tok);
      REQUIRE(!tok.empty());
      std::size_t start = (tok[0] == '#' || tok[0] == '@') ? 1 : 0;
      REQUIRE(tok.size() > start);
      for (std::size_t i = start; i < tok.size(); ++i) REQUIRE((tok[i] >= 'a' && tok[i] <= 'z'));
      REQUIRE(o.stopwords.count(tok) == 0);
    }
  }
}

TEST_CASE("utf8 helpers round-trip") {
  const std::string s = "a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80";
  const auto cps = text::decode_utf8(s);
  REQUIRE(cps == std::u32string{U'a', U'é', U'€', U'\U0001F600'});
  std::string back;
  for (char32_t c : cps) text::append_utf8(back, c);
  CHECK(back == s);
  CHECK(text::decode_utf8("\xFF" "a") == std::u32string{U'a'});
}
