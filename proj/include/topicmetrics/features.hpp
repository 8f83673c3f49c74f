#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "topicmetrics/corpus.hpp"
#include "topicmetrics/kernels.hpp"

namespace topicmetrics {

enum class FeatureKind { topic, sentiment, combined };

std::string_view to_string(FeatureKind kind);
FeatureKind parse_feature_kind(std::string_view name);

struct FeatureMatrix {
  Dense values;  // row i is documents[i]
  std::vector<std::string> column_labels;
  FeatureKind kind = FeatureKind::topic;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values.cols()); }
};

/// Dummy variables: all K columns kept, labelled topic_0 .. topic_{K-1}.
FeatureMatrix one_hot_topics(const std::vector<std::size_t>& assignments, std::size_t k);

using Lexicon = std::unordered_map<std::string, double>;

/// Lines of `token<TAB>polarity`, polarity in [-1, 1].
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(const std::string& content);

/// Sentiment copied from the corpus column.
FeatureMatrix sentiment_from_column(const Corpus& corpus);

/// sum of matched polarities / max(1, |tokens|), clamped to [-1, 1].
FeatureMatrix sentiment_from_lexicon(const Corpus& corpus, const Lexicon& lexicon);

/// Topic columns first, then the sentiment column.
FeatureMatrix combine_features(const FeatureMatrix& topic, const FeatureMatrix& sentiment);

}  // namespace topicmetrics
