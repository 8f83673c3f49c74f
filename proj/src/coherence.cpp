#include "topicmetrics/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "topicmetrics/diagnostics.hpp"
#include "topicmetrics/error.hpp"

namespace topicmetrics {

std::string_view to_string(CoherenceMeasure m) { return m == CoherenceMeasure::npmi ? "npmi" : "umass"; }

CoherenceMeasure parse_coherence_measure(std::string_view name) {
  if (name == "npmi") return CoherenceMeasure::npmi;
  if (name == "umass") return CoherenceMeasure::umass;
  throw PreconditionError(fmt::format("unknown coherence measure '{}'", name));
}

double npmi(double p_i, double p_j, double p_ij) {
  if (p_ij <= 0.0 || p_i <= 0.0 || p_j <= 0.0) return -1.0;
  if (p_ij >= 1.0) return 1.0;
  // Summing logs keeps p_i == p_j == p_ij exactly at 1.
  const double log_joint = std::log(p_ij);
  const double value = (log_joint - std::log(p_i) - std::log(p_j)) / -log_joint;
  return std::clamp(value, -1.0, 1.0);
}

namespace {

// Corpus tokens mapped to dense ids once, shared by every topic.
struct EncodedCorpus {
  std::unordered_map<std::string, int> ids;
  std::vector<std::vector<int>> docs;
};

EncodedCorpus encode(const Corpus& corpus) {
  EncodedCorpus enc;
  enc.docs.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    std::vector<int> row;
    row.reserve(doc.tokens.size());
    for (const auto& t : doc.tokens) {
      auto [it, inserted] = enc.ids.try_emplace(t, static_cast<int>(enc.ids.size()));
      row.push_back(it->second);
    }
    enc.docs.push_back(std::move(row));
  }
  return enc;
}

double score_topic(const std::vector<Keyword>& topic, std::size_t topic_index, const EncodedCorpus& enc,
                   const CoherenceConfig& config) {
  const std::size_t n = std::min(config.top_n, topic.size());
  if (n < 2) throw PreconditionError(fmt::format("topic {} has fewer than two keywords", topic_index));

  std::vector<int> local(enc.ids.size(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = enc.ids.find(topic[i].term);
    if (it == enc.ids.end()) {
      warn(fmt::format("keyword '{}' of topic {} does not occur in the corpus", topic[i].term, topic_index));
      continue;
    }
    local[static_cast<std::size_t>(it->second)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> codes(enc.docs.size());
  for (std::size_t d = 0; d < enc.docs.size(); ++d) {
    codes[d].reserve(enc.docs[d].size());
    for (int id : enc.docs[d]) codes[d].push_back(local[static_cast<std::size_t>(id)]);
  }
  const std::size_t window = config.measure == CoherenceMeasure::npmi ? config.window : 0;
  const auto counts = kernels::omp::count_windows(codes, n, window);

  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ci = static_cast<double>(counts.single[i]);
      const auto cj = static_cast<double>(counts.single[j]);
      const auto cij = static_cast<double>(counts.pair[i * n + j]);
      if (config.measure == CoherenceMeasure::npmi) {
        const auto w = static_cast<double>(counts.windows);
        total += w > 0.0 ? npmi(ci / w, cj / w, cij / w) : -1.0;
      } else {
        total += ci > 0.0 ? std::log((cij + 1.0) / ci) : std::log(config.epsilon);
      }
      ++pairs;
    }
  }
  return config.measure == CoherenceMeasure::npmi ? total / static_cast<double>(pairs) : total;
}

void check_config(const CoherenceConfig& config) {
  if (config.top_n < 2) throw PreconditionError("coherence top_n must be at least 2");
  if (config.measure == CoherenceMeasure::npmi && config.window < 2) {
    throw PreconditionError("coherence window must be at least 2");
  }
  if (!(config.epsilon > 0.0)) throw PreconditionError("coherence epsilon must be positive");
}

}  // namespace

std::vector<double> topic_coherences(const TopicKeywords& keywords, const Corpus& corpus,
                                     const CoherenceConfig& config) {
  check_config(config);
  if (keywords.empty()) throw PreconditionError("keyword list is empty");
  const auto enc = encode(corpus);
  std::vector<double> scores;
  scores.reserve(keywords.size());
  for (std::size_t t = 0; t < keywords.size(); ++t) scores.push_back(score_topic(keywords[t], t, enc, config));
  return scores;
}

double coherence_score(const TopicKeywords& keywords, const Corpus& corpus, const CoherenceConfig& config) {
  const auto scores = topic_coherences(keywords, corpus, config);
  double s = 0.0;
  for (double v : scores) s += v;
  return s / static_cast<double>(scores.size());
}

// ---------------------------------------------------------------- sweep

SweepResult sweep(const Corpus& corpus, const TopicInputs& inputs, const std::vector<ModelSpec>& models,
                  std::size_t k_min, std::size_t k_max, std::size_t step, const CoherenceConfig& config,
                  std::uint64_t seed) {
  if (k_min < 1 || k_min > k_max) throw PreconditionError(fmt::format("need 1 <= k_min <= k_max, got {}..{}", k_min, k_max));
  if (step < 1) throw PreconditionError("sweep step must be at least 1");
  check_config(config);

  SweepResult result;
  result.measure = config.measure;
  for (const auto& spec : models) {
    for (std::size_t k = k_min; k <= k_max; k += step) {
      result.rows.push_back({spec.kind, k, spec.describe(k), 0.0});
    }
  }
  std::vector<std::size_t> spec_of_row;
  for (std::size_t s = 0; s < models.size(); ++s) {
    for (std::size_t k = k_min; k <= k_max; k += step) spec_of_row.push_back(s);
  }

  std::vector<std::exception_ptr> errors(result.rows.size());
  const auto n_rows = static_cast<std::ptrdiff_t>(result.rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
    auto& row = result.rows[static_cast<std::size_t>(r)];
    try {
      const auto& spec = models[spec_of_row[static_cast<std::size_t>(r)]];
      const auto derived = derive_seed(seed, fmt::format("{}:{}", to_string(row.model), row.k));
      const auto model = fit_topic_model(spec, inputs, row.k, derived);
      const auto keywords = top_keywords(model, std::min(config.top_n, model.terms.size()));
      row.score = coherence_score(keywords, corpus, config);
    } catch (...) {
      errors[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (std::size_t r = 0; r < errors.size(); ++r) {
    if (!errors[r]) continue;
    const auto& row = result.rows[r];
    try {
      std::rethrow_exception(errors[r]);
    } catch (const PreconditionError& e) {
      throw PreconditionError(fmt::format("{} K={}: {}", to_string(row.model), row.k, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("{} K={}: {}", to_string(row.model), row.k, e.what()));
    } catch (const std::exception& e) {
      throw Error(fmt::format("{} K={}: {}", to_string(row.model), row.k, e.what()));
    }
  }
  return result;
}

std::string serialize_sweep_csv(const SweepResult& result, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  out += "model,k,measure,score\n";
  for (const auto& row : result.rows) {
    out += fmt::format("{},{},{},{:.4f}\n", to_string(row.model), row.k, to_string(result.measure), row.score);
  }
  return out;
}

SweepResult parse_sweep_csv(const std::string& csv) {
  SweepResult result;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "model,k,measure,score") throw DataError("sweep CSV has an unexpected header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) throw DataError(fmt::format("malformed sweep row at line {}", line_no));
    try {
      SweepRow row;
      row.model = parse_model_kind(cells[0]);
      row.k = std::stoul(cells[1]);
      result.measure = parse_coherence_measure(cells[2]);
      row.score = std::stod(cells[3]);
      result.rows.push_back(row);
    } catch (const std::logic_error&) {
      throw DataError(fmt::format("malformed sweep row at line {}", line_no));
    }
  }
  if (!header_seen) throw DataError("sweep CSV has no header");
  return result;
}

double best_score(const SweepResult& result, ModelKind model) {
  bool found = false;
  double best = 0.0;
  for (const auto& row : result.rows) {
    if (row.model != model) continue;
    if (!found || row.score > best) best = row.score;
    found = true;
  }
  if (!found) throw PreconditionError(fmt::format("sweep has no rows for model {}", to_string(model)));
  return best;
}

double enhancement(double cluster_best, double lda_best, double nmf_best) {
  if (!(cluster_best > 0.0) || !(lda_best > 0.0) || !(nmf_best > 0.0)) {
    throw PreconditionError("enhancement needs positive coherence scores");
  }
  const double baseline = std::max(lda_best, nmf_best);
  return (cluster_best - baseline) / baseline * 100.0;
}

}  // namespace topicmetrics
