#include "topicmetrics/features.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "topicmetrics/error.hpp"
#include "topicmetrics/io.hpp"

namespace topicmetrics {

std::string_view to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::topic:
      return "topic";
    case FeatureKind::sentiment:
      return "sentiment";
    case FeatureKind::combined:
      return "combined";
  }
  return "?";
}

FeatureKind parse_feature_kind(std::string_view name) {
  if (name == "topic") return FeatureKind::topic;
  if (name == "sentiment") return FeatureKind::sentiment;
  if (name == "combined") return FeatureKind::combined;
  throw PreconditionError(fmt::format("unknown feature kind '{}'", name));
}

FeatureMatrix one_hot_topics(const std::vector<std::size_t>& assignments, std::size_t k) {
  if (k < 1) throw PreconditionError("one-hot encoding needs K >= 1");
  FeatureMatrix f;
  f.kind = FeatureKind::topic;
  f.values = Dense::Zero(static_cast<Eigen::Index>(assignments.size()), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] >= k) {
      throw PreconditionError(fmt::format("topic id {} of document {} is outside [0, {})", assignments[i], i, k));
    }
    f.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(assignments[i])) = 1.0;
  }
  for (std::size_t c = 0; c < k; ++c) f.column_labels.push_back(fmt::format("topic_{}", c));
  return f;
}

Lexicon parse_lexicon(const std::string& content) {
  Lexicon lex;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(fmt::format("lexicon line {} lacks a tab", line_no));
    double polarity = 0.0;
    try {
      std::size_t used = 0;
      polarity = std::stod(line.substr(tab + 1), &used);
    } catch (const std::logic_error&) {
      throw DataError(fmt::format("lexicon line {} has a malformed polarity", line_no));
    }
    if (!std::isfinite(polarity) || polarity < -1.0 || polarity > 1.0) {
      throw DataError(fmt::format("lexicon polarity out of range at line {}", line_no));
    }
    lex[line.substr(0, tab)] = polarity;
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) { return parse_lexicon(io::read_file(path)); }

FeatureMatrix sentiment_from_column(const Corpus& corpus) {
  FeatureMatrix f;
  f.kind = FeatureKind::sentiment;
  f.column_labels = {"sentiment"};
  f.values.resize(static_cast<Eigen::Index>(corpus.size()), 1);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& doc = corpus.documents[i];
    if (!doc.sentiment) throw DataError("document '" + doc.id + "' has no sentiment value");
    f.values(static_cast<Eigen::Index>(i), 0) = *doc.sentiment;
  }
  return f;
}

FeatureMatrix sentiment_from_lexicon(const Corpus& corpus, const Lexicon& lexicon) {
  FeatureMatrix f;
  f.kind = FeatureKind::sentiment;
  f.column_labels = {"sentiment"};
  f.values.resize(static_cast<Eigen::Index>(corpus.size()), 1);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& tokens = corpus.documents[i].tokens;
    double sum = 0.0;
    for (const auto& t : tokens) {
      if (auto it = lexicon.find(t); it != lexicon.end()) sum += it->second;
    }
    const double denom = std::max<double>(1.0, static_cast<double>(tokens.size()));
    f.values(static_cast<Eigen::Index>(i), 0) = std::clamp(sum / denom, -1.0, 1.0);
  }
  return f;
}

FeatureMatrix combine_features(const FeatureMatrix& topic, const FeatureMatrix& sentiment) {
  if (topic.rows() != sentiment.rows()) {
    throw PreconditionError(
        fmt::format("row count mismatch: {} topic rows vs {} sentiment rows", topic.rows(), sentiment.rows()));
  }
  FeatureMatrix f;
  f.kind = FeatureKind::combined;
  f.values.resize(topic.values.rows(), topic.values.cols() + sentiment.values.cols());
  f.values.leftCols(topic.values.cols()) = topic.values;
  f.values.rightCols(sentiment.values.cols()) = sentiment.values;
  f.column_labels = topic.column_labels;
  f.column_labels.insert(f.column_labels.end(), sentiment.column_labels.begin(), sentiment.column_labels.end());
  return f;
}

}  // namespace topicmetrics
