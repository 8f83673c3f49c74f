#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "topicmetrics/error.hpp"
#include "topicmetrics/random.hpp"
#include "topicmetrics/topics.hpp"

using namespace topicmetrics;

namespace {

DocTermMatrix counts_from_tokens(const std::vector<std::vector<std::string>>& docs) {
  Corpus c;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Document d;
    d.id = std::to_string(i);
    d.tokens = docs[i];
    c.documents.push_back(d);
  }
  c.vocabulary = build_vocabulary(c.documents);
  c.preprocessed = true;
  return build_doc_term_matrix(c, Weighting::count);
}

// Straightforward collapsed Gibbs sampler over explicit token lists. Draw
// order: one topic per token at start, then per sweep one uniform per token.
struct ReferenceLda {
  std::vector<std::vector<int>> docs;  // word ids, column order with multiplicity
  std::vector<std::vector<int>> z;
  std::vector<std::vector<double>> ndk, nkw;
  std::vector<double> nk;
  int k, v;
  double alpha, beta;

  ReferenceLda(const DocTermMatrix& m, int k_, double a, double b, std::uint64_t seed, int iterations)
      : k(k_), v(static_cast<int>(m.cols())), alpha(a), beta(b) {
    const Dense dense(m.values);
    for (Eigen::Index d = 0; d < dense.rows(); ++d) {
      std::vector<int> doc;
      for (Eigen::Index w = 0; w < dense.cols(); ++w) {
        for (int r = 0; r < static_cast<int>(dense(d, w)); ++r) doc.push_back(static_cast<int>(w));
      }
      docs.push_back(doc);
    }
    Rng rng(seed);
    ndk.assign(docs.size(), std::vector<double>(k, 0.0));
    nkw.assign(k, std::vector<double>(v, 0.0));
    nk.assign(k, 0.0);
    for (std::size_t d = 0; d < docs.size(); ++d) {
      z.emplace_back();
      for (int w : docs[d]) {
        const int t = static_cast<int>(rng.index(static_cast<std::uint64_t>(k)));
        z[d].push_back(t);
        ndk[d][t] += 1;
        nkw[t][w] += 1;
        nk[t] += 1;
      }
    }
    for (int it = 0; it < iterations; ++it) {
      for (std::size_t d = 0; d < docs.size(); ++d) {
        for (std::size_t p = 0; p < docs[d].size(); ++p) {
          const int w = docs[d][p];
          int t = z[d][p];
          ndk[d][t] -= 1;
          nkw[t][w] -= 1;
          nk[t] -= 1;
          std::vector<double> cum(k);
          double total = 0.0;
          for (int j = 0; j < k; ++j) {
            total += (ndk[d][j] + alpha) * (nkw[j][w] + beta) / (nk[j] + v * beta);
            cum[j] = total;
          }
          const double u = rng.uniform() * total;
          t = 0;
          while (t + 1 < k && cum[t] <= u) ++t;
          z[d][p] = t;
          ndk[d][t] += 1;
          nkw[t][w] += 1;
          nk[t] += 1;
        }
      }
    }
  }

  double theta(std::size_t d, int t) const { return (ndk[d][t] + alpha) / (docs[d].size() + k * alpha); }
};

std::vector<std::vector<std::string>> disjoint_docs() {
  Rng rng(12);
  std::vector<std::vector<std::string>> docs;
  for (int d = 0; d < 20; ++d) {
    std::vector<std::string> doc;
    for (int i = 0; i < 12; ++i) {
      if (d % 2 == 0) doc.push_back(rng.index(2) ? "a" : "b");
      else doc.push_back(rng.index(2) ? "c" : "d");
    }
    docs.push_back(doc);
  }
  return docs;
}

double brute_force_best_2partition(const Dense& p) {
  const int n = static_cast<int>(p.rows());
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    double sse = 0.0;
    for (int side = 0; side < 2; ++side) {
      Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(p.cols());
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (((mask >> i) & 1) == side) {
          mean += p.row(i);
          ++count;
        }
      }
      mean /= count;
      for (int i = 0; i < n; ++i) {
        if (((mask >> i) & 1) == side) sse += (p.row(i) - mean).squaredNorm();
      }
    }
    best = std::min(best, sse);
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------- LDA

TEST_CASE("lda with one topic is degenerate") {
  const auto m = counts_from_tokens(disjoint_docs());
  LdaOptions o;
  o.iterations = 5;
  const auto r = fit_lda(m, 1, o);
  CHECK(std::all_of(r.assignments.begin(), r.assignments.end(), [](std::size_t a) { return a == 0; }));
  CHECK(r.doc_topic == Dense::Ones(r.doc_topic.rows(), 1));
  CHECK(r.topic_term.row(0).sum() == doctest::Approx(1.0));
}

TEST_CASE("lda argument checks") {
  const auto m = counts_from_tokens(disjoint_docs());
  CHECK_THROWS_AS(fit_lda(m, 0), PreconditionError);
  const auto frac = DocTermMatrix::from_dense({{0.5, 1.0}}, Weighting::count);
  CHECK_THROWS_AS(fit_lda(frac, 2), PreconditionError);
  LdaOptions o;
  o.iterations = 0;
  CHECK_THROWS_AS(fit_lda(m, 2, o), PreconditionError);
}

TEST_CASE("lda counts are conserved after every sweep") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> rows(3 + rng.index(5), std::vector<double>(6));
    for (auto& row : rows) {
      for (auto& v : row) v = static_cast<double>(rng.index(4));
    }
    const auto m = DocTermMatrix::from_dense(rows, Weighting::count);
    const auto k = 1 + rng.index(4);
    LdaSampler s(m, k, 0.5, 0.1, rng.next());
    const Dense dense(m.values);
    for (int sweep = 0; sweep < 20; ++sweep) {
      s.sweep();
      REQUIRE_NOTHROW(s.verify_counts());
      for (std::size_t d = 0; d < s.n_docs(); ++d) {
        std::uint64_t sum = 0;
        for (std::size_t t = 0; t < k; ++t) sum += s.doc_topic_count(d, t);
        REQUIRE(sum == static_cast<std::uint64_t>(dense.row(static_cast<Eigen::Index>(d)).sum()));
      }
      std::uint64_t all = 0;
      for (std::size_t t = 0; t < k; ++t) {
        std::uint64_t sum = 0;
        for (std::size_t w = 0; w < s.n_terms(); ++w) sum += s.topic_word_count(t, w);
        REQUIRE(sum == s.topic_count(t));
        all += sum;
      }
      REQUIRE(all == s.n_tokens());
    }
  }
}

TEST_CASE("lda separates disjoint vocabularies and matches the reference sampler") {
  const auto m = counts_from_tokens(disjoint_docs());
  LdaOptions o;
  o.alpha = 0.1;
  o.beta = 0.1;
  o.iterations = 500;
  o.seed = 31;
  const auto r = fit_lda(m, 2, o);
  for (Eigen::Index d = 0; d < r.doc_topic.rows(); ++d) CHECK(r.doc_topic.row(d).maxCoeff() >= 0.8);
  for (std::size_t d = 2; d < r.assignments.size(); ++d) {
    CHECK(r.assignments[d] == r.assignments[d % 2]);
  }
  CHECK(r.assignments[0] != r.assignments[1]);

  const ReferenceLda ref(m, 2, 0.1, 0.1, 31, 500);
  for (std::size_t d = 0; d < ref.docs.size(); ++d) {
    for (int t = 0; t < 2; ++t) {
      CHECK(r.doc_topic(static_cast<Eigen::Index>(d), t) == ref.theta(d, t));
    }
  }
}

// ---------------------------------------------------------------- NMF

TEST_CASE("nmf objective matches the dense definition") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + rng.index(10));
    const auto m = static_cast<Eigen::Index>(1 + rng.index(10));
    const auto k = static_cast<Eigen::Index>(1 + rng.index(4));
    Dense v(n, m), w(n, k), h(k, m);
    for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = rng.uniform() < 0.5 ? 0.0 : rng.uniform();
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = rng.uniform();
    for (Eigen::Index i = 0; i < h.size(); ++i) h.data()[i] = rng.uniform();
    CHECK(nmf_objective(v.sparseView(), w, h) == doctest::Approx((v - w * h).squaredNorm()).epsilon(1e-10));
  }
}

TEST_CASE("nmf keeps an exact factorization fixed") {
  Dense w0(4, 2), h0(2, 5);
  w0 << 1, 0, 0.5, 2, 0, 1, 3, 1;
  h0 << 1, 0, 2, 0.5, 1, 0, 1, 1, 3, 0.25;
  const Dense v = w0 * h0;
  NmfOptions o;
  o.init_w = w0;
  o.init_h = h0;
  o.iterations = 30;
  o.tol = 0.0;
  const auto f = nmf_factorize(v.sparseView(), 2, o);
  for (double obj : f.objective) CHECK(obj < 1e-20);
  CHECK((f.w * f.h - v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("nmf objective is non-increasing on a random 6x5 matrix") {
  Rng rng(42);
  Dense v(6, 5);
  for (Eigen::Index i = 0; i < v.size(); ++i) v.data()[i] = rng.uniform();
  NmfOptions o;
  o.seed = 42;
  o.iterations = 200;
  o.tol = 0.0;
  const auto f = nmf_factorize(v.sparseView(), 2, o);
  REQUIRE(f.objective.size() == 201);
  for (std::size_t i = 1; i < f.objective.size(); ++i) CHECK(f.objective[i] <= f.objective[i - 1] + 1e-9);
  CHECK((f.w.array() >= 0.0).all());
  CHECK((f.h.array() >= 0.0).all());
}

TEST_CASE("nmf rejects negative input and K < 1") {
  const Dense v = (Dense(2, 2) << 1, -0.1, 0, 1).finished();
  CHECK_THROWS_AS(nmf_factorize(v.sparseView(), 1), PreconditionError);
  const Dense ok = Dense::Ones(2, 2);
  CHECK_THROWS_AS(nmf_factorize(ok.sparseView(), 0), PreconditionError);
}

TEST_CASE("nmf doc_topic rows are L1-normalized, zero rows uniform") {
  const auto m = DocTermMatrix::from_dense({{1, 0, 2}, {0, 0, 0}, {0, 3, 1}, {1, 1, 0}}, Weighting::tfidf);
  NmfOptions o;
  o.seed = 5;
  const auto r = fit_nmf(m, 2, o);
  for (Eigen::Index i = 0; i < r.doc_topic.rows(); ++i) CHECK(r.doc_topic.row(i).sum() == doctest::Approx(1.0));
  CHECK(r.doc_topic(1, 0) == doctest::Approx(0.5));
  CHECK(r.assignments == assign_topics(r));
}

// ---------------------------------------------------------------- k-means and clusters

TEST_CASE("k-means partitions well separated clouds exactly") {
  Rng rng(3);
  Dense p(40, 2);
  for (Eigen::Index i = 0; i < 40; ++i) {
    const double cx = i < 20 ? 0.0 : 100.0;
    p(i, 0) = cx + rng.uniform();
    p(i, 1) = rng.uniform();
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = kmeans(p, 2, seed);
    for (Eigen::Index i = 0; i < 40; ++i) CHECK(r.labels[static_cast<std::size_t>(i)] == (i < 20 ? 0u : 1u));
  }
}

TEST_CASE("k-means on square corners reaches the best 2-partition") {
  const Dense p = (Dense(4, 2) << 0, 0, 1, 0, 0, 1, 1, 1).finished();
  const double best = brute_force_best_2partition(p);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (std::abs(kmeans(p, 2, seed).sse - best) < 1e-12) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("k-means sse never increases and ends at nearest centroids") {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    Dense p(30, 3);
    for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = rng.normal();
    const auto k = 1 + rng.index(6);
    const auto r = kmeans(p, k, rng.next());
    for (std::size_t i = 1; i < r.sse_history.size(); ++i) CHECK(r.sse_history[i] <= r.sse_history[i - 1] + 1e-12);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double own = (p.row(i) - r.centroids.row(static_cast<Eigen::Index>(r.labels[static_cast<std::size_t>(i)]))).squaredNorm();
      for (Eigen::Index c = 0; c < r.centroids.rows(); ++c) CHECK(own <= (p.row(i) - r.centroids.row(c)).squaredNorm() + 1e-12);
    }
  }
}

TEST_CASE("k-means handles duplicate points and K = n") {
  const Dense p = (Dense(4, 1) << 1, 1, 1, 5).finished();
  const auto r = kmeans(p, 4, 1);
  CHECK(r.labels == std::vector<std::size_t>{0, 1, 2, 3});
  const auto two = kmeans(p, 2, 1);
  CHECK(two.sse == 0.0);
}

TEST_CASE("c-tf-idf hand example") {
  const auto m = counts_from_tokens({{"a", "a", "b"}, {"b", "c"}});
  const auto w = c_tf_idf(m, {0, 1}, 2);
  // terms a, b, c; A = 2.5; f_a = 2
  CHECK(w(0, 0) == doctest::Approx(2.0 * std::log(2.25)).epsilon(1e-12));
  CHECK(w(0, 0) == doctest::Approx(1.6219).epsilon(1e-4));
  CHECK(w(1, 0) == 0.0);
  CHECK(w(0, 2) == 0.0);
  CHECK(w(1, 2) > 0.0);
}

TEST_CASE("c-tf-idf single class and empty class") {
  const auto m = counts_from_tokens({{"a", "a", "b"}, {"b", "c"}});
  const auto w = c_tf_idf(m, {0, 0}, 1);
  const double a = 5.0;
  CHECK(w(0, 0) == doctest::Approx(2.0 * std::log(1.0 + a / 2.0)));
  CHECK(w(0, 1) == doctest::Approx(2.0 * std::log(1.0 + a / 2.0)));
  CHECK(w(0, 2) == doctest::Approx(1.0 * std::log(1.0 + a / 1.0)));
  CHECK_THROWS_AS(c_tf_idf(m, {0, 0}, 2), PreconditionError);
}

TEST_CASE("cluster topics with K = n give each document its own topic") {
  const auto m = counts_from_tokens({{"a", "b"}, {"c"}, {"d", "e", "d"}});
  EmbeddingMatrix e{(Dense(3, 2) << 0, 0, 5, 5, 10, 0).finished()};
  const auto r = fit_cluster_topics(e, m, 3, 4);
  CHECK(r.assignments == std::vector<std::size_t>{0, 1, 2});
  const Dense dense(m.values);
  for (Eigen::Index t = 0; t < 3; ++t) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) CHECK((r.topic_term(t, j) > 0.0) == (dense(t, j) > 0.0));
    CHECK(r.doc_topic.row(t).sum() == 1.0);
  }
  CHECK_THROWS_AS(fit_cluster_topics(e, m, 4, 4), PreconditionError);
  EmbeddingMatrix short_e{Dense::Zero(2, 2)};
  CHECK_THROWS_AS(fit_cluster_topics(short_e, m, 2, 4), PreconditionError);
}

// ---------------------------------------------------------------- keywords, persistence, determinism

TEST_CASE("top keywords order by weight then term") {
  TopicModelResult r;
  r.k = 2;
  r.terms = {"x", "y", "z"};
  r.topic_term = (Dense(2, 3) << 0.5, 0.3, 0.2, 0.1, 0.5, 0.5).finished();
  const auto kw = top_keywords(r, 2);
  CHECK(kw[0][0].term == "x");
  CHECK(kw[0][0].weight == 0.5);
  CHECK(kw[0][1].term == "y");
  CHECK(kw[1][0].term == "y");
  CHECK(kw[1][1].term == "z");
  r.terms = {"c", "b", "a"};
  CHECK(top_keywords(r, 2)[1][0].term == "a");
  CHECK_THROWS_AS(top_keywords(r, 4), PreconditionError);
  CHECK_THROWS_AS(top_keywords(r, 0), PreconditionError);
}

TEST_CASE("ten keywords per topic") {
  TopicModelResult r;
  r.k = 1;
  for (int i = 0; i < 15; ++i) r.terms.push_back("t" + std::to_string(100 + i));
  r.topic_term = Dense::Ones(1, 15);
  const auto kw = top_keywords(r, 10);
  REQUIRE(kw[0].size() == 10);
  std::set<std::string> unique;
  for (std::size_t i = 0; i < 10; ++i) {
    unique.insert(kw[0][i].term);
    if (i > 0) CHECK(kw[0][i].weight <= kw[0][i - 1].weight);
  }
  CHECK(unique.size() == 10);
}

TEST_CASE("assign_topics takes the first maximum") {
  TopicModelResult r;
  r.doc_topic = (Dense(3, 3) << 0.2, 0.7, 0.1, 0.5, 0.5, 0.0, 0, 0, 1).finished();
  CHECK(assign_topics(r) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("model JSON round-trips exactly") {
  const auto m = counts_from_tokens(disjoint_docs());
  LdaOptions o;
  o.iterations = 20;
  o.seed = 77;
  const auto r = fit_lda(m, 3, o);
  const auto text = serialize_model(r, "{\"command\":\"test\"}");
  const auto back = parse_model(text);
  CHECK(back.kind == r.kind);
  CHECK(back.k == r.k);
  CHECK(back.seed == r.seed);
  CHECK(back.terms == r.terms);
  CHECK(back.doc_topic == r.doc_topic);
  CHECK(back.topic_term == r.topic_term);
  CHECK(back.assignments == r.assignments);
  CHECK_THROWS_AS(parse_model("{not json"), DataError);
  CHECK_THROWS_AS(parse_model("{\"model_kind\":\"lda\"}"), DataError);
}

TEST_CASE("all three fits are deterministic given the seed") {
  const auto counts = counts_from_tokens(disjoint_docs());
  Corpus c;
  const auto tfidf = DocTermMatrix{counts.values, counts.vocabulary, Weighting::tfidf};
  Rng rng(1);
  EmbeddingMatrix e{Dense(counts.rows(), 6)};
  for (Eigen::Index i = 0; i < e.values.size(); ++i) e.values.data()[i] = rng.normal();
  const TopicInputs in{&counts, &tfidf, &e};
  for (auto kind : {ModelKind::lda, ModelKind::nmf, ModelKind::cluster}) {
    ModelSpec spec;
    spec.kind = kind;
    spec.lda.iterations = 50;
    const auto a = fit_topic_model(spec, in, 3, 99);
    const auto b = fit_topic_model(spec, in, 3, 99);
    CHECK(a.doc_topic == b.doc_topic);
    CHECK(a.topic_term == b.topic_term);
    CHECK(a.assignments == b.assignments);
  }
}

TEST_CASE("model kind names") {
  CHECK(parse_model_kind("lda") == ModelKind::lda);
  CHECK(parse_model_kind("bertopic") == ModelKind::cluster);
  CHECK(to_string(ModelKind::nmf) == "nmf");
  CHECK_THROWS_AS(parse_model_kind("hdp"), PreconditionError);
}
