#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topicmetrics/corpus.hpp"
#include "topicmetrics/topics.hpp"

namespace topicmetrics {

enum class CoherenceMeasure { npmi, umass };

std::string_view to_string(CoherenceMeasure m);
CoherenceMeasure parse_coherence_measure(std::string_view name);

struct CoherenceConfig {
  CoherenceMeasure measure = CoherenceMeasure::npmi;
  std::size_t top_n = 10;
  std::size_t window = 10;  // npmi only
  double epsilon = 1e-12;
};

/// NPMI from window probabilities. Pairs that never co-occur score -1;
/// pairs present in every window score 1.
double npmi(double p_i, double p_j, double p_ij);

/// Per-topic coherence over each topic's first `top_n` keywords: the mean
/// pairwise NPMI over sliding windows, or the UMass sum
/// sum_{i<j} ln((D(w_i, w_j) + 1) / D(w_i)) over documents. Keywords missing
/// from the corpus trigger a warning and score with epsilon smoothing.
std::vector<double> topic_coherences(const TopicKeywords& keywords, const Corpus& corpus,
                                     const CoherenceConfig& config);

/// Mean of topic_coherences.
double coherence_score(const TopicKeywords& keywords, const Corpus& corpus, const CoherenceConfig& config);

// ---------------------------------------------------------------- sweep

struct SweepRow {
  ModelKind model = ModelKind::lda;
  std::size_t k = 0;
  std::string hyperparams;
  double score = 0.0;
};

struct SweepResult {
  CoherenceMeasure measure = CoherenceMeasure::npmi;
  std::vector<SweepRow> rows;  // models in request order, K ascending within a model
};

/// Fits every (model, K) for K = k_min, k_min + step, ..., <= k_max and
/// scores its keywords. Each fit uses derive_seed(seed, "<model>:<K>"), so
/// rows do not depend on evaluation order; configurations run in parallel.
SweepResult sweep(const Corpus& corpus, const TopicInputs& inputs, const std::vector<ModelSpec>& models,
                  std::size_t k_min, std::size_t k_max, std::size_t step, const CoherenceConfig& config,
                  std::uint64_t seed);

/// Header `model,k,measure,score`, scores at 4 decimals. A non-empty
/// `comment` is written first as a `# ` line.
std::string serialize_sweep_csv(const SweepResult& result, const std::string& comment = {});
SweepResult parse_sweep_csv(const std::string& csv);

/// Best score per model kind present in the sweep.
double best_score(const SweepResult& result, ModelKind model);

/// Percentage gain of the embedding-cluster model over the better of the two
/// bag-of-words baselines: (b - max(lda, nmf)) / max(lda, nmf) * 100.
double enhancement(double cluster_best, double lda_best, double nmf_best);

}  // namespace topicmetrics
