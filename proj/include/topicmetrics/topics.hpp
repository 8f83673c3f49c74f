#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topicmetrics/corpus.hpp"
#include "topicmetrics/embedding.hpp"
#include "topicmetrics/kernels.hpp"
#include "topicmetrics/random.hpp"

namespace topicmetrics {

enum class ModelKind { lda, nmf, cluster };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Uniform output of all three topic-model families.
struct TopicModelResult {
  ModelKind kind = ModelKind::lda;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> terms;        // column labels of topic_term
  Dense doc_topic;                       // n_docs x K
  Dense topic_term;                      // K x n_terms
  std::vector<std::size_t> assignments;  // argmax of doc_topic rows

  std::size_t n_docs() const { return static_cast<std::size_t>(doc_topic.rows()); }
};

/// Row-wise argmax; ties go to the lowest topic id.
std::vector<std::size_t> assign_topics(const TopicModelResult& result);
std::vector<std::size_t> argmax_rows(const Dense& m);

// ---------------------------------------------------------------- LDA

struct LdaOptions {
  std::optional<double> alpha;  // defaults to 50 / K
  double beta = 0.01;
  std::size_t iterations = 1000;
  std::uint64_t seed = 0;
  bool verify_counts = false;  // check count conservation after every sweep
};

/// Collapsed Gibbs sampler over a count matrix. Tokens are visited in
/// document order, and within a document in column order with multiplicity.
class LdaSampler {
 public:
  LdaSampler(const DocTermMatrix& counts, std::size_t k, double alpha, double beta, std::uint64_t seed);

  /// One full pass resampling every token's topic.
  void sweep();

  /// Throws Error if any of the count identities is broken.
  void verify_counts() const;

  std::size_t n_docs() const { return doc_len_.size(); }
  std::size_t n_terms() const { return n_terms_; }
  std::size_t n_topics() const { return k_; }
  std::size_t n_tokens() const { return token_word_.size(); }

  std::uint32_t doc_topic_count(std::size_t d, std::size_t k) const { return n_dk_[d * k_ + k]; }
  std::uint32_t topic_word_count(std::size_t k, std::size_t w) const { return n_kw_[k * n_terms_ + w]; }
  std::uint32_t topic_count(std::size_t k) const { return n_k_[k]; }
  std::uint32_t doc_length(std::size_t d) const { return doc_len_[d]; }

  /// (n_dk + alpha) / (len_d + K alpha)
  Dense doc_topic() const;
  /// (n_kw + beta) / (n_k + V beta)
  Dense topic_term() const;

 private:
  std::size_t k_;
  std::size_t n_terms_;
  double alpha_;
  double beta_;
  Rng rng_;
  std::vector<std::uint32_t> token_doc_;
  std::vector<std::uint32_t> token_word_;
  std::vector<std::uint32_t> token_topic_;
  std::vector<std::uint32_t> doc_len_;
  std::vector<std::uint32_t> n_dk_;
  std::vector<std::uint32_t> n_kw_;
  std::vector<std::uint32_t> n_k_;
  std::vector<double> weights_;
};

TopicModelResult fit_lda(const DocTermMatrix& counts, std::size_t k, const LdaOptions& options = {});

// ---------------------------------------------------------------- NMF

struct NmfOptions {
  std::size_t iterations = 200;
  double tol = 1e-4;
  double eps = 1e-12;
  std::uint64_t seed = 0;
  /// Test hook: start from these factors instead of random ones.
  std::optional<Dense> init_w;
  std::optional<Dense> init_h;
};

struct NmfFactors {
  Dense w;  // n x K
  Dense h;  // K x m
  std::vector<double> objective;  // after initialization and after each iteration
  std::size_t iterations = 0;
};

/// ||V - WH||_F^2 evaluated without forming WH densely.
double nmf_objective(const Sparse& v, const Dense& w, const Dense& h);

/// One multiplicative update of H, then of W.
void nmf_update_h(const Sparse& v, const Sparse& vt, const Dense& w, Dense& h, double eps);
void nmf_update_w(const Sparse& v, Dense& w, const Dense& h, double eps);

NmfFactors nmf_factorize(const Sparse& v, std::size_t k, const NmfOptions& options = {});

TopicModelResult fit_nmf(const DocTermMatrix& weights, std::size_t k, const NmfOptions& options = {});

// ---------------------------------------------------------------- clustering

struct KMeansOptions {
  std::size_t max_iterations = 100;
  std::size_t restarts = 10;  // k-means++ restarts; lowest SSE wins
};

struct KMeansResult {
  std::vector<std::size_t> labels;  // relabeled by first appearance in row order
  Dense centroids;
  double sse = 0.0;
  std::size_t iterations = 0;
  std::vector<double> sse_history;  // winning restart, one entry per assignment step
};

KMeansResult kmeans(const Dense& points, std::size_t k, std::uint64_t seed, const KMeansOptions& options = {});

/// Class-based TF-IDF: W[c][t] = tf(t,c) * ln(1 + A / f(t)), where A is the
/// mean token count per class and f(t) the total count of t.
Dense c_tf_idf(const DocTermMatrix& counts, const std::vector<std::size_t>& classes, std::size_t n_classes);

struct ClusterOptions {
  std::size_t reduced_dim = 5;
  KMeansOptions kmeans;
};

TopicModelResult fit_cluster_topics(const EmbeddingMatrix& emb, const DocTermMatrix& counts, std::size_t k,
                                    std::uint64_t seed, const ClusterOptions& options = {});

// ---------------------------------------------------------------- dispatch

/// Hyperparameters for one topic-model family.
struct ModelSpec {
  ModelKind kind = ModelKind::cluster;
  LdaOptions lda;
  NmfOptions nmf;
  ClusterOptions cluster;

  /// Short "name=value" summary of the hyperparameters that apply to `kind`.
  std::string describe(std::size_t k) const;
};

/// Matrices a fit may need. `embeddings` is required for the cluster model.
struct TopicInputs {
  const DocTermMatrix* counts = nullptr;
  const DocTermMatrix* tfidf = nullptr;
  const EmbeddingMatrix* embeddings = nullptr;
};

/// Fits `spec` with K topics; `seed` overrides the seed in the spec.
TopicModelResult fit_topic_model(const ModelSpec& spec, const TopicInputs& inputs, std::size_t k,
                                 std::uint64_t seed);

// ---------------------------------------------------------------- keywords

struct Keyword {
  std::string term;
  double weight = 0.0;
};

using TopicKeywords = std::vector<std::vector<Keyword>>;

/// Top `n` terms per topic by weight, descending; ties in byte order of term.
TopicKeywords top_keywords(const TopicModelResult& result, std::size_t n);

// ---------------------------------------------------------------- persistence

/// JSON document with model_kind, K, seed, vocabulary, topic_term, doc_topic
/// and assignments. `config_json` (if non-empty) is stored under "config".
std::string serialize_model(const TopicModelResult& result, const std::string& config_json = {});
TopicModelResult parse_model(const std::string& json_text);
TopicModelResult load_model(const std::filesystem::path& path);

}  // namespace topicmetrics
