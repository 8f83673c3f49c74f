#include "topicmetrics/topics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "topicmetrics/error.hpp"

namespace topicmetrics {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::lda:
      return "lda";
    case ModelKind::nmf:
      return "nmf";
    case ModelKind::cluster:
      return "cluster";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "lda") return ModelKind::lda;
  if (name == "nmf") return ModelKind::nmf;
  if (name == "cluster" || name == "bertopic") return ModelKind::cluster;
  throw PreconditionError(fmt::format("unknown model kind '{}'", name));
}

std::vector<std::size_t> argmax_rows(const Dense& m) {
  std::vector<std::size_t> out(static_cast<std::size_t>(m.rows()), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < m.cols(); ++k) {
      if (m(i, k) > m(i, best)) best = k;
    }
    out[static_cast<std::size_t>(i)] = static_cast<std::size_t>(best);
  }
  return out;
}

std::vector<std::size_t> assign_topics(const TopicModelResult& result) { return argmax_rows(result.doc_topic); }

namespace {

void require_topics(std::size_t k) {
  if (k < 1) throw PreconditionError(fmt::format("number of topics must be at least 1, got {}", k));
}

}  // namespace

// ---------------------------------------------------------------- LDA

LdaSampler::LdaSampler(const DocTermMatrix& counts, std::size_t k, double alpha, double beta, std::uint64_t seed)
    : k_(k), n_terms_(counts.cols()), alpha_(alpha), beta_(beta), rng_(seed) {
  require_topics(k);
  if (counts.rows() == 0) throw PreconditionError("cannot fit LDA on an empty corpus");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw PreconditionError("alpha and beta must be positive");
  const std::size_t n_docs = counts.rows();
  doc_len_.assign(n_docs, 0);
  for (Eigen::Index d = 0; d < counts.values.rows(); ++d) {
    for (DocTermMatrix::Storage::InnerIterator it(counts.values, d); it; ++it) {
      const double c = it.value();
      if (c < 0.0 || c != std::floor(c)) {
        throw PreconditionError(fmt::format("LDA needs integral counts; found {} at ({}, {})", c, d, it.col()));
      }
      for (auto r = static_cast<std::uint64_t>(c); r > 0; --r) {
        token_doc_.push_back(static_cast<std::uint32_t>(d));
        token_word_.push_back(static_cast<std::uint32_t>(it.col()));
      }
      doc_len_[static_cast<std::size_t>(d)] += static_cast<std::uint32_t>(c);
    }
  }
  n_dk_.assign(n_docs * k_, 0);
  n_kw_.assign(k_ * n_terms_, 0);
  n_k_.assign(k_, 0);
  weights_.assign(k_, 0.0);
  token_topic_.resize(token_word_.size());
  for (std::size_t t = 0; t < token_word_.size(); ++t) {
    const auto z = static_cast<std::uint32_t>(rng_.index(k_));
    token_topic_[t] = z;
    ++n_dk_[token_doc_[t] * k_ + z];
    ++n_kw_[z * n_terms_ + token_word_[t]];
    ++n_k_[z];
  }
}

void LdaSampler::sweep() {
  const double v_beta = static_cast<double>(n_terms_) * beta_;
  for (std::size_t t = 0; t < token_word_.size(); ++t) {
    const std::size_t d = token_doc_[t];
    const std::size_t w = token_word_[t];
    const std::size_t old = token_topic_[t];
    --n_dk_[d * k_ + old];
    --n_kw_[old * n_terms_ + w];
    --n_k_[old];

    double total = 0.0;
    for (std::size_t k = 0; k < k_; ++k) {
      total += (n_dk_[d * k_ + k] + alpha_) * (n_kw_[k * n_terms_ + w] + beta_) / (n_k_[k] + v_beta);
      weights_[k] = total;
    }
    const double u = rng_.uniform() * total;
    std::size_t z = 0;
    while (z + 1 < k_ && weights_[z] <= u) ++z;

    token_topic_[t] = static_cast<std::uint32_t>(z);
    ++n_dk_[d * k_ + z];
    ++n_kw_[z * n_terms_ + w];
    ++n_k_[z];
  }
}

void LdaSampler::verify_counts() const {
  for (std::size_t d = 0; d < doc_len_.size(); ++d) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < k_; ++k) s += n_dk_[d * k_ + k];
    if (s != doc_len_[d]) throw Error(fmt::format("LDA count drift: document {} sums to {} not {}", d, s, doc_len_[d]));
  }
  for (std::size_t k = 0; k < k_; ++k) {
    std::uint64_t s = 0;
    for (std::size_t w = 0; w < n_terms_; ++w) s += n_kw_[k * n_terms_ + w];
    if (s != n_k_[k]) throw Error(fmt::format("LDA count drift: topic {} sums to {} not {}", k, s, n_k_[k]));
  }
  // Unsigned counters that underflowed would show up as enormous values.
  const auto limit = static_cast<std::uint32_t>(token_word_.size());
  auto bad = [limit](std::uint32_t c) { return c > limit; };
  if (std::any_of(n_dk_.begin(), n_dk_.end(), bad) || std::any_of(n_kw_.begin(), n_kw_.end(), bad) ||
      std::any_of(n_k_.begin(), n_k_.end(), bad)) {
    throw Error("LDA count drift: negative count");
  }
}

Dense LdaSampler::doc_topic() const {
  Dense out(static_cast<Eigen::Index>(n_docs()), static_cast<Eigen::Index>(k_));
  const double k_alpha = static_cast<double>(k_) * alpha_;
  for (std::size_t d = 0; d < n_docs(); ++d) {
    for (std::size_t k = 0; k < k_; ++k) {
      out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k)) =
          (n_dk_[d * k_ + k] + alpha_) / (doc_len_[d] + k_alpha);
    }
  }
  return out;
}

Dense LdaSampler::topic_term() const {
  Dense out(static_cast<Eigen::Index>(k_), static_cast<Eigen::Index>(n_terms_));
  const double v_beta = static_cast<double>(n_terms_) * beta_;
  for (std::size_t k = 0; k < k_; ++k) {
    for (std::size_t w = 0; w < n_terms_; ++w) {
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(w)) =
          (n_kw_[k * n_terms_ + w] + beta_) / (n_k_[k] + v_beta);
    }
  }
  return out;
}

TopicModelResult fit_lda(const DocTermMatrix& counts, std::size_t k, const LdaOptions& options) {
  require_topics(k);
  if (options.iterations < 1) throw PreconditionError("LDA needs at least one iteration");
  const double alpha = options.alpha.value_or(50.0 / static_cast<double>(k));
  LdaSampler sampler(counts, k, alpha, options.beta, options.seed);
  for (std::size_t it = 0; it < options.iterations; ++it) {
    sampler.sweep();
#ifndef NDEBUG
    sampler.verify_counts();
#else
    if (options.verify_counts) sampler.verify_counts();
#endif
  }
  TopicModelResult r;
  r.kind = ModelKind::lda;
  r.k = k;
  r.seed = options.seed;
  r.terms = counts.vocabulary.terms;
  r.doc_topic = sampler.doc_topic();
  r.topic_term = sampler.topic_term();
  r.assignments = argmax_rows(r.doc_topic);
  return r;
}

// ---------------------------------------------------------------- NMF

double nmf_objective(const Sparse& v, const Dense& w, const Dense& h) {
  // ||V||^2 - 2 <V, WH> + tr((W^T W)(H H^T))
  double v2 = 0.0;
  double cross = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Sparse::InnerIterator it(v, i); it; ++it) {
      v2 += it.value() * it.value();
      cross += it.value() * w.row(i).dot(h.col(it.col()));
    }
  }
  const Dense wtw = kernels::omp::gram_cols(w);
  const Dense hht = kernels::omp::gram_rows(h);
  const double model = wtw.cwiseProduct(hht).sum();
  return std::max(0.0, v2 - 2.0 * cross + model);
}

void nmf_update_h(const Sparse& /*v*/, const Sparse& vt, const Dense& w, Dense& h, double eps) {
  const Dense wtv = kernels::omp::sparse_dense_product(vt, w).transpose();
  const Dense denom = kernels::omp::dense_product(kernels::omp::gram_cols(w), h);
  kernels::omp::multiplicative_update(h, wtv, denom, eps);
}

void nmf_update_w(const Sparse& v, Dense& w, const Dense& h, double eps) {
  const Dense ht = h.transpose();
  const Dense vht = kernels::omp::sparse_dense_product(v, ht);
  const Dense denom = kernels::omp::dense_product(w, kernels::omp::gram_rows(h));
  kernels::omp::multiplicative_update(w, vht, denom, eps);
}

NmfFactors nmf_factorize(const Sparse& v, std::size_t k, const NmfOptions& options) {
  require_topics(k);
  if (v.rows() == 0 || v.cols() == 0) throw PreconditionError("cannot factor an empty matrix");
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Sparse::InnerIterator it(v, i); it; ++it) {
      if (it.value() < 0.0 || !std::isfinite(it.value())) {
        throw PreconditionError(fmt::format("NMF input has a negative entry at ({}, {})", i, it.col()));
      }
    }
  }
  const auto n = v.rows();
  const auto m = v.cols();
  const auto kk = static_cast<Eigen::Index>(k);
  NmfFactors f;
  if (options.init_w || options.init_h) {
    if (!options.init_w || !options.init_h) throw PreconditionError("NMF init needs both W and H");
    f.w = *options.init_w;
    f.h = *options.init_h;
    if (f.w.rows() != n || f.w.cols() != kk || f.h.rows() != kk || f.h.cols() != m) {
      throw PreconditionError("NMF init factors have the wrong shape");
    }
  } else {
    Rng rng(options.seed);
    f.w.resize(n, kk);
    f.h.resize(kk, m);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < kk; ++j) f.w(i, j) = rng.uniform_open_closed();
    }
    for (Eigen::Index i = 0; i < kk; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) f.h(i, j) = rng.uniform_open_closed();
    }
  }
  const Sparse vt = v.transpose();
  f.objective.push_back(nmf_objective(v, f.w, f.h));
  for (std::size_t it = 0; it < options.iterations; ++it) {
    nmf_update_h(v, vt, f.w, f.h, options.eps);
    nmf_update_w(v, f.w, f.h, options.eps);
    ++f.iterations;
    const double prev = f.objective.back();
    const double cur = nmf_objective(v, f.w, f.h);
    f.objective.push_back(cur);
    if (prev <= 0.0 || (prev - cur) / prev < options.tol) break;
  }
  return f;
}

TopicModelResult fit_nmf(const DocTermMatrix& weights, std::size_t k, const NmfOptions& options) {
  NmfFactors f = nmf_factorize(weights.values, k, options);
  TopicModelResult r;
  r.kind = ModelKind::nmf;
  r.k = k;
  r.seed = options.seed;
  r.terms = weights.vocabulary.terms;
  r.doc_topic = f.w;
  for (Eigen::Index i = 0; i < r.doc_topic.rows(); ++i) {
    const double s = r.doc_topic.row(i).sum();
    if (s > 0.0) {
      r.doc_topic.row(i) /= s;
    } else {
      r.doc_topic.row(i).setConstant(1.0 / static_cast<double>(k));
    }
  }
  r.topic_term = std::move(f.h);
  r.assignments = argmax_rows(r.doc_topic);
  return r;
}

// ---------------------------------------------------------------- c-TF-IDF

Dense c_tf_idf(const DocTermMatrix& counts, const std::vector<std::size_t>& classes, std::size_t n_classes) {
  if (classes.size() != counts.rows()) throw PreconditionError("one class id per document is required");
  if (n_classes < 1) throw PreconditionError("need at least one class");
  const auto m = static_cast<Eigen::Index>(counts.cols());
  Dense tf = Dense::Zero(static_cast<Eigen::Index>(n_classes), m);
  std::vector<std::size_t> members(n_classes, 0);
  for (std::size_t d = 0; d < classes.size(); ++d) {
    const std::size_t c = classes[d];
    if (c >= n_classes) throw PreconditionError(fmt::format("class id {} out of range [0, {})", c, n_classes));
    ++members[c];
    for (DocTermMatrix::Storage::InnerIterator it(counts.values, static_cast<Eigen::Index>(d)); it; ++it) {
      tf(static_cast<Eigen::Index>(c), it.col()) += it.value();
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (members[c] == 0) throw PreconditionError(fmt::format("class {} has no documents", c));
  }
  const Eigen::RowVectorXd f = tf.colwise().sum();
  const double avg = tf.sum() / static_cast<double>(n_classes);
  Dense w = Dense::Zero(tf.rows(), tf.cols());
  for (Eigen::Index t = 0; t < m; ++t) {
    if (f(t) <= 0.0) continue;
    const double idf = std::log(1.0 + avg / f(t));
    for (Eigen::Index c = 0; c < tf.rows(); ++c) w(c, t) = tf(c, t) * idf;
  }
  return w;
}

TopicModelResult fit_cluster_topics(const EmbeddingMatrix& emb, const DocTermMatrix& counts, std::size_t k,
                                    std::uint64_t seed, const ClusterOptions& options) {
  require_topics(k);
  if (emb.n_docs() != counts.rows()) {
    throw PreconditionError(
        fmt::format("dimension mismatch: {} embedding rows, {} documents", emb.n_docs(), counts.rows()));
  }
  if (k > emb.n_docs()) throw PreconditionError(fmt::format("K = {} exceeds {} documents", k, emb.n_docs()));
  if (emb.dim() == 0) throw PreconditionError("embeddings have zero columns");
  const auto reduced = reduce_dim(emb, std::min(options.reduced_dim, emb.dim()), seed);
  const auto clusters = kmeans(reduced.values, k, seed, options.kmeans);

  TopicModelResult r;
  r.kind = ModelKind::cluster;
  r.k = k;
  r.seed = seed;
  r.terms = counts.vocabulary.terms;
  r.doc_topic = Dense::Zero(static_cast<Eigen::Index>(emb.n_docs()), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < clusters.labels.size(); ++i) {
    r.doc_topic(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(clusters.labels[i])) = 1.0;
  }
  r.topic_term = c_tf_idf(counts, clusters.labels, k);
  r.assignments = clusters.labels;
  return r;
}

// ---------------------------------------------------------------- dispatch

std::string ModelSpec::describe(std::size_t k) const {
  switch (kind) {
    case ModelKind::lda:
      return fmt::format("alpha={};beta={};iterations={}", lda.alpha.value_or(50.0 / static_cast<double>(k)),
                         lda.beta, lda.iterations);
    case ModelKind::nmf:
      return fmt::format("iterations={};tol={}", nmf.iterations, nmf.tol);
    case ModelKind::cluster:
      return fmt::format("reduced_dim={};restarts={}", cluster.reduced_dim, cluster.kmeans.restarts);
  }
  return {};
}

TopicModelResult fit_topic_model(const ModelSpec& spec, const TopicInputs& inputs, std::size_t k,
                                 std::uint64_t seed) {
  switch (spec.kind) {
    case ModelKind::lda: {
      if (inputs.counts == nullptr) throw PreconditionError("LDA needs a count matrix");
      auto opts = spec.lda;
      opts.seed = seed;
      return fit_lda(*inputs.counts, k, opts);
    }
    case ModelKind::nmf: {
      if (inputs.tfidf == nullptr) throw PreconditionError("NMF needs a TF-IDF matrix");
      auto opts = spec.nmf;
      opts.seed = seed;
      return fit_nmf(*inputs.tfidf, k, opts);
    }
    case ModelKind::cluster:
      if (inputs.counts == nullptr || inputs.embeddings == nullptr) {
        throw PreconditionError("the cluster model needs embeddings and a count matrix");
      }
      return fit_cluster_topics(*inputs.embeddings, *inputs.counts, k, seed, spec.cluster);
  }
  throw PreconditionError("unknown model kind");
}

// ---------------------------------------------------------------- keywords

TopicKeywords top_keywords(const TopicModelResult& result, std::size_t n) {
  if (n < 1) throw PreconditionError("keyword count must be at least 1");
  const auto m = static_cast<std::size_t>(result.topic_term.cols());
  if (n > m) throw PreconditionError(fmt::format("requested {} keywords but vocabulary has {} terms", n, m));
  if (result.terms.size() != m) throw PreconditionError("model vocabulary does not match topic_term width");
  TopicKeywords out;
  std::vector<std::size_t> order(m);
  for (Eigen::Index k = 0; k < result.topic_term.rows(); ++k) {
    std::iota(order.begin(), order.end(), 0);
    auto row = result.topic_term.row(k);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double wa = row(static_cast<Eigen::Index>(a));
                        const double wb = row(static_cast<Eigen::Index>(b));
                        if (wa != wb) return wa > wb;
                        return result.terms[a] < result.terms[b];
                      });
    std::vector<Keyword> topic;
    topic.reserve(n);
    for (std::size_t i = 0; i < n; ++i) topic.push_back({result.terms[order[i]], row(static_cast<Eigen::Index>(order[i]))});
    out.push_back(std::move(topic));
  }
  return out;
}

}  // namespace topicmetrics
