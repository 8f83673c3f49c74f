#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topicmetrics/classify.hpp"
#include "topicmetrics/coherence.hpp"

namespace topicmetrics {

/// Pearson correlation between 0/1 labels and real scores.
double point_biserial(const Labels& stance, const std::vector<double>& sentiment);

/// (metric - baseline) / baseline * 100.
double improvement(double metric_f1, double sentiment_f1);

struct MetricCell {
  double f1 = 0.0;
  double sd = 0.0;
};

struct ComparisonRow {
  std::string dataset;
  std::optional<MetricCell> topic;
  std::optional<MetricCell> sentiment;
  std::optional<MetricCell> combined;
  std::optional<double> corr;
  std::optional<double> coherence_best;

  /// Present when both cells exist and the sentiment F1 is positive.
  std::optional<double> impr_topic() const;
  std::optional<double> impr_combined() const;
};

struct DatasetSweep {
  std::string dataset;
  SweepResult sweep;
};

enum class ReportFormat { markdown, csv };

ReportFormat parse_report_format(std::string_view name);

/// Deterministic rendering. Markdown marks every maximal F1 in a row in
/// bold and appends one coherence table per sweep; CSV has one line per row.
/// A non-empty `comment` is written first (HTML comment or `# ` line).
std::string render_report(const std::vector<ComparisonRow>& rows, const std::vector<DatasetSweep>& sweeps,
                          ReportFormat format, const std::string& comment = {});

}  // namespace topicmetrics
