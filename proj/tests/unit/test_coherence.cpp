#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "synthetic.hpp"
#include "topicmetrics/coherence.hpp"
#include "topicmetrics/diagnostics.hpp"
#include "topicmetrics/embedding.hpp"
#include "topicmetrics/error.hpp"

using namespace topicmetrics;

namespace {

Corpus corpus_of(const std::vector<std::vector<std::string>>& docs) {
  Corpus c;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Document d;
    d.id = std::to_string(i);
    d.tokens = docs[i];
    c.documents.push_back(d);
  }
  c.vocabulary = build_vocabulary(c.documents);
  c.preprocessed = true;
  return c;
}

TopicKeywords keywords_of(const std::vector<std::vector<std::string>>& topics) {
  TopicKeywords out;
  for (const auto& t : topics) {
    std::vector<Keyword> kw;
    double w = 1.0;
    for (const auto& term : t) kw.push_back({term, w -= 0.01});
    out.push_back(kw);
  }
  return out;
}

CoherenceConfig npmi_window(std::size_t window) {
  CoherenceConfig c;
  c.window = window;
  return c;
}

}  // namespace

TEST_CASE("npmi closed forms") {
  CHECK(npmi(0.3, 0.3, 0.3) == 1.0);
  CHECK(npmi(1.0, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(npmi(0.5, 0.5, 0.0) == -1.0);
  CHECK(npmi(0.5, 0.5, 0.25) == doctest::Approx(0.0));
}

TEST_CASE("perfect co-occurrence scores exactly one") {
  const auto c = corpus_of({{"a", "b"}, {"a", "b", "x", "y"}, {"z"}, {"q", "r"}});
  CHECK(coherence_score(keywords_of({{"a", "b"}}), c, npmi_window(10)) == 1.0);
}

TEST_CASE("windows {a,b} and {a,c} give zero for (a,b)") {
  const auto c = corpus_of({{"a", "b"}, {"a", "c"}});
  CHECK(coherence_score(keywords_of({{"a", "b"}}), c, npmi_window(2)) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("umass pair with D(wi)=2 and D(wi,wj)=1 is zero") {
  const auto c = corpus_of({{"a", "b"}, {"a"}, {"b"}, {"c"}});
  CoherenceConfig cfg;
  cfg.measure = CoherenceMeasure::umass;
  CHECK(coherence_score(keywords_of({{"a", "b"}}), c, cfg) == doctest::Approx(0.0));
  // (D(a,b)+1)/D(b) = 2/2 with b first as well
  CHECK(coherence_score(keywords_of({{"b", "a"}}), c, cfg) == doctest::Approx(0.0));
  // three keywords: pairs (a,b), (a,c), (b,c) with D(a)=2, D(b)=2
  CHECK(coherence_score(keywords_of({{"a", "b", "c"}}), c, cfg) ==
        doctest::Approx(std::log(2.0 / 2.0) + std::log(1.0 / 2.0) + std::log(1.0 / 2.0)));
}

TEST_CASE("npmi is symmetric in keyword order") {
  Rng rng(4);
  std::vector<std::vector<std::string>> docs;
  for (int d = 0; d < 30; ++d) {
    std::vector<std::string> doc;
    for (int i = 0; i < 15; ++i) doc.push_back(std::string(1, static_cast<char>('a' + rng.index(8))));
    docs.push_back(doc);
  }
  const auto c = corpus_of(docs);
  std::vector<std::string> words{"a", "b", "c", "d", "e"};
  const double base = coherence_score(keywords_of({words}), c, npmi_window(4));
  for (int trial = 0; trial < 20; ++trial) {
    rng.shuffle(std::span(words));
    CHECK(coherence_score(keywords_of({words}), c, npmi_window(4)) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("missing keyword warns and scores -1 for its pairs") {
  const auto c = corpus_of({{"a", "b"}, {"a", "b"}});
  std::vector<std::string> seen;
  const auto previous = set_warning_sink([&](const std::string& m) { seen.push_back(m); });
  const double s = coherence_score(keywords_of({{"a", "b", "zzz"}}), c, npmi_window(10));
  set_warning_sink(previous);
  CHECK(s == doctest::Approx((1.0 - 1.0 - 1.0) / 3.0));
  REQUIRE(seen.size() == 1);
  CHECK(seen[0].find("zzz") != std::string::npos);
}

TEST_CASE("coherence configuration checks") {
  const auto c = corpus_of({{"a", "b"}});
  CoherenceConfig cfg;
  cfg.top_n = 1;
  CHECK_THROWS_AS(coherence_score(keywords_of({{"a", "b"}}), c, cfg), PreconditionError);
  CHECK_THROWS_AS(coherence_score(keywords_of({{"a", "b"}}), c, npmi_window(1)), PreconditionError);
  CHECK_THROWS_AS(coherence_score({}, c, npmi_window(10)), PreconditionError);
  CHECK_THROWS_AS(coherence_score(keywords_of({{"a"}}), c, npmi_window(10)), PreconditionError);
  CHECK(parse_coherence_measure("umass") == CoherenceMeasure::umass);
  CHECK_THROWS_AS(parse_coherence_measure("cv"), PreconditionError);
}

TEST_CASE("planted theme words outscore random word sets") {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    synth::Options o;
    o.n_docs = 200;
    const auto data = synth::generate(o, seed);
    Rng rng(seed + 1000);
    const auto& terms = data.corpus.vocabulary.terms;
    std::vector<std::vector<std::string>> planted, random;
    for (const auto& words : data.theme_words) {
      planted.emplace_back(words.begin(), words.begin() + 10);
      std::vector<std::string> pick(terms);
      rng.shuffle(std::span(pick));
      random.emplace_back(pick.begin(), pick.begin() + 10);
    }
    const auto cfg = npmi_window(10);
    if (coherence_score(keywords_of(planted), data.corpus, cfg) > coherence_score(keywords_of(random), data.corpus, cfg)) {
      ++wins;
    }
  }
  CHECK(wins == 10);
}

TEST_CASE("sweep row counts and determinism") {
  synth::Options o;
  o.n_docs = 60;
  o.n_themes = 4;
  const auto data = synth::generate(o, 3);
  const auto counts = build_doc_term_matrix(data.corpus, Weighting::count);
  const auto tfidf = build_doc_term_matrix(data.corpus, Weighting::tfidf);
  const auto emb = lsa_embed(tfidf, 8, 1);
  const TopicInputs in{&counts, &tfidf, &emb};
  std::vector<ModelSpec> models(3);
  models[0].kind = ModelKind::lda;
  models[0].lda.iterations = 20;
  models[1].kind = ModelKind::nmf;
  models[2].kind = ModelKind::cluster;

  const auto a = sweep(data.corpus, in, models, 2, 6, 2, {}, 11);
  REQUIRE(a.rows.size() == 9);
  CHECK(a.rows[0].model == ModelKind::lda);
  CHECK(a.rows[1].k == 4);
  CHECK(a.rows[8].model == ModelKind::cluster);
  const auto b = sweep(data.corpus, in, models, 2, 6, 2, {}, 11);
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].score == b.rows[i].score);

  // single K, and a step larger than the range
  CHECK(sweep(data.corpus, in, models, 3, 3, 1, {}, 11).rows.size() == 3);
  const auto wide = sweep(data.corpus, in, models, 3, 5, 10, {}, 11);
  REQUIRE(wide.rows.size() == 3);
  CHECK(wide.rows[1].k == 3);
  // a row matches a direct fit under the derived seed
  const auto direct = fit_topic_model(models[1], in, 3, derive_seed(11, "nmf:3"));
  CHECK(wide.rows[1].score == coherence_score(top_keywords(direct, 10), data.corpus, {}));

  CHECK_THROWS_AS(sweep(data.corpus, in, models, 5, 4, 1, {}, 11), PreconditionError);
  CHECK_THROWS_AS(sweep(data.corpus, in, models, 1, 4, 0, {}, 11), PreconditionError);
}

TEST_CASE("five to fifty in steps of five gives thirty rows for three models") {
  synth::Options o;
  o.n_docs = 120;
  o.n_themes = 4;
  const auto data = synth::generate(o, 9);
  const auto counts = build_doc_term_matrix(data.corpus, Weighting::count);
  const auto tfidf = build_doc_term_matrix(data.corpus, Weighting::tfidf);
  const auto emb = lsa_embed(tfidf, 8, 1);
  const TopicInputs in{&counts, &tfidf, &emb};
  std::vector<ModelSpec> models(3);
  models[0].kind = ModelKind::lda;
  models[0].lda.iterations = 5;
  models[1].kind = ModelKind::nmf;
  models[1].nmf.iterations = 10;
  models[2].kind = ModelKind::cluster;
  models[2].cluster.kmeans.restarts = 1;
  const auto r = sweep(data.corpus, in, models, 5, 50, 5, {}, 1);
  CHECK(r.rows.size() == 30);
}

TEST_CASE("sweep CSV round trip") {
  SweepResult s;
  s.measure = CoherenceMeasure::umass;
  s.rows = {{ModelKind::lda, 5, "", -1.23456}, {ModelKind::cluster, 10, "", 0.5}};
  const auto text = serialize_sweep_csv(s, "{\"seed\":1}");
  CHECK(text == "# {\"seed\":1}\nmodel,k,measure,score\nlda,5,umass,-1.2346\ncluster,10,umass,0.5000\n");
  const auto back = parse_sweep_csv(text);
  CHECK(back.measure == CoherenceMeasure::umass);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[0].score == -1.2346);
  CHECK(back.rows[1].model == ModelKind::cluster);
  CHECK_THROWS_AS(parse_sweep_csv("a,b\n"), DataError);
  CHECK_THROWS_AS(parse_sweep_csv("model,k,measure,score\nlda,x,npmi,1\n"), DataError);
}

TEST_CASE("best score and enhancement") {
  SweepResult s;
  s.rows = {{ModelKind::lda, 5, "", 0.3}, {ModelKind::lda, 10, "", 0.4}, {ModelKind::nmf, 5, "", 0.6}};
  CHECK(best_score(s, ModelKind::lda) == 0.4);
  CHECK_THROWS_AS(best_score(s, ModelKind::cluster), PreconditionError);
  CHECK(enhancement(0.7539, 0.4006, 0.6329) == doctest::Approx(19.12).epsilon(1e-4));
  CHECK(enhancement(0.9431, 0.4518, 0.6116) == doctest::Approx(54.20).epsilon(1e-4));
  CHECK(enhancement(0.5, 0.5, 0.5) == 0.0);
  CHECK_THROWS_AS(enhancement(0.5, -0.1, 0.5), PreconditionError);
}
