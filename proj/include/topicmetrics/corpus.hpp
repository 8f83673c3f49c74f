#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

#include "topicmetrics/text.hpp"

namespace topicmetrics {

struct Document {
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;
  std::optional<int> stance;        // 0 or 1
  std::optional<double> sentiment;  // [-1, 1]
};

struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> doc_freq;  // parallel to terms

  std::size_t size() const { return terms.size(); }
  std::optional<std::size_t> find(const std::string& term) const;
};

/// Terms sorted bytewise; doc_freq counts documents containing each term.
Vocabulary build_vocabulary(const std::vector<Document>& documents);

struct Corpus {
  std::vector<Document> documents;
  Vocabulary vocabulary;
  bool preprocessed = false;

  std::size_t size() const { return documents.size(); }
};

enum class CorpusFormat { jsonl, csv };

/// Picks the format from the extension (.csv, otherwise jsonl).
CorpusFormat format_for_path(const std::filesystem::path& path);

/// Reads documents in file order. JSONL records that already carry a
/// "tokens" array are loaded as preprocessed. A first line of the form
/// {"_config": ...} is treated as a header and skipped.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

/// Same as load_corpus but from in-memory content.
Corpus parse_corpus(const std::string& content, CorpusFormat format);

/// Applies preprocess_text to every document and rebuilds the vocabulary.
Corpus preprocess_corpus(Corpus corpus, const PreprocessOptions& options);

/// JSONL with tokens; `header_json`, when non-empty, is written as a
/// {"_config": ...} first line.
std::string serialize_corpus_jsonl(const Corpus& corpus, const std::string& header_json = {});

enum class Weighting { count, tfidf };

struct DocTermMatrix {
  using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  Storage values;  // row i is documents[i]
  Vocabulary vocabulary;
  Weighting weighting = Weighting::count;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values.cols()); }

  /// Builds a matrix from dense row-major values; zero entries are dropped.
  /// Terms default to "t0", "t1", ... when not supplied.
  static DocTermMatrix from_dense(const std::vector<std::vector<double>>& rows,
                                  Weighting weighting,
                                  std::vector<std::string> terms = {});
};

/// count: raw term counts. tfidf: tf * (1 + ln((1+N)/(1+df))) followed by
/// row L2 normalization (all-zero rows stay zero).
DocTermMatrix build_doc_term_matrix(const Corpus& corpus, Weighting weighting, std::size_t min_df = 1);

struct CorpusStats {
  std::size_t n_docs = 0;
  double avg_tokens = 0.0;
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace topicmetrics
