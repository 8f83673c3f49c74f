#include "topicmetrics/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "topicmetrics/error.hpp"

namespace topicmetrics {

double point_biserial(const Labels& stance, const std::vector<double>& sentiment) {
  if (stance.size() != sentiment.size()) {
    throw PreconditionError(fmt::format("length mismatch: {} labels vs {} scores", stance.size(), sentiment.size()));
  }
  const std::size_t n = stance.size();
  if (n < 2) throw PreconditionError("correlation needs at least two observations");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (stance[i] != 0 && stance[i] != 1) throw PreconditionError("stance labels must be 0 or 1");
    mx += stance[i];
    my += sentiment[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = stance[i] - mx;
    const double dy = sentiment[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw PreconditionError("stance has a single class; correlation undefined");
  if (syy == 0.0) throw PreconditionError("sentiment is constant; correlation undefined");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double improvement(double metric_f1, double sentiment_f1) {
  if (!(sentiment_f1 > 0.0)) throw PreconditionError("improvement baseline must be positive");
  return (metric_f1 - sentiment_f1) / sentiment_f1 * 100.0;
}

namespace {

std::optional<double> improvement_of(const std::optional<MetricCell>& a, const std::optional<MetricCell>& base) {
  if (!a || !base || !(base->f1 > 0.0)) return std::nullopt;
  return improvement(a->f1, base->f1);
}

std::string fixed4(double v) { return fmt::format("{:.4f}", v); }
std::string fixed2(double v) { return fmt::format("{:.2f}", v); }

template <typename T, typename F>
std::string or_na(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : std::string("n/a");
}

// Blank when a model is missing from the sweep or a baseline is not
// positive.
std::optional<double> sweep_enhancement(const SweepResult& sweep) {
  try {
    return enhancement(best_score(sweep, ModelKind::cluster), best_score(sweep, ModelKind::lda),
                       best_score(sweep, ModelKind::nmf));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::string render_markdown(const std::vector<ComparisonRow>& rows, const std::vector<DatasetSweep>& sweeps) {
  std::string out;
  out += "## F1 by metric (mean over folds, sample std in parentheses)\n\n";
  out += "| Dataset | Topic | Sentiment | Combined | Corr(Stance, Sentiment) |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    double best = -1.0;
    for (const auto* c : {&row.topic, &row.sentiment, &row.combined}) {
      if (*c) best = std::max(best, (*c)->f1);
    }
    auto cell = [&](const std::optional<MetricCell>& c) {
      if (!c) return std::string("n/a");
      const auto mean = fixed4(c->f1);
      return fmt::format("{} ({})", c->f1 == best ? "**" + mean + "**" : mean, fixed4(c->sd));
    };
    out += fmt::format("| {} | {} | {} | {} | {} |\n", row.dataset, cell(row.topic), cell(row.sentiment),
                       cell(row.combined), or_na(row.corr, fixed4));
  }

  out += "\n## Improvement over sentiment\n\n";
  out += "| Dataset | Topic (%) | Combined (%) | Best coherence |\n";
  out += "|---|---|---|---|\n";
  for (const auto& row : rows) {
    out += fmt::format("| {} | {} | {} | {} |\n", row.dataset, or_na(row.impr_topic(), fixed2),
                       or_na(row.impr_combined(), fixed2), or_na(row.coherence_best, fixed4));
  }

  for (const auto& ds : sweeps) {
    out += fmt::format("\n## Coherence sweep: {} ({})\n\n", ds.dataset, to_string(ds.sweep.measure));
    out += "| Model | K | Score |\n|---|---|---|\n";
    for (const auto& r : ds.sweep.rows) out += fmt::format("| {} | {} | {} |\n", to_string(r.model), r.k, fixed4(r.score));
    out += "\n| Model | Best score |\n|---|---|\n";
    for (auto kind : {ModelKind::lda, ModelKind::nmf, ModelKind::cluster}) {
      const bool present =
          std::any_of(ds.sweep.rows.begin(), ds.sweep.rows.end(), [&](const SweepRow& r) { return r.model == kind; });
      if (present) out += fmt::format("| {} | {} |\n", to_string(kind), fixed4(best_score(ds.sweep, kind)));
    }
    out += fmt::format("\nCluster enhancement over best baseline: {}\n",
                       or_na(sweep_enhancement(ds.sweep), [](double v) { return fixed2(v) + "%"; }));
  }
  return out;
}

std::string render_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "dataset,f1_topic,sd_topic,f1_sentiment,sd_sentiment,f1_combined,sd_combined,corr,impr_topic_pct,"
      "impr_combined_pct,coherence_best\n";
  auto mean = [](const std::optional<MetricCell>& c) { return c ? fixed4(c->f1) : std::string(); };
  auto sd = [](const std::optional<MetricCell>& c) { return c ? fixed4(c->sd) : std::string(); };
  auto num = [](const std::optional<double>& v, auto f) { return v ? f(*v) : std::string(); };
  for (const auto& row : rows) {
    if (row.dataset.find_first_of(",\"\n") != std::string::npos) {
      throw PreconditionError("dataset name '" + row.dataset + "' cannot be written to CSV");
    }
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", row.dataset, mean(row.topic), sd(row.topic),
                       mean(row.sentiment), sd(row.sentiment), mean(row.combined), sd(row.combined),
                       num(row.corr, fixed4), num(row.impr_topic(), fixed2), num(row.impr_combined(), fixed2),
                       num(row.coherence_best, fixed4));
  }
  return out;
}

}  // namespace

std::optional<double> ComparisonRow::impr_topic() const { return improvement_of(topic, sentiment); }
std::optional<double> ComparisonRow::impr_combined() const { return improvement_of(combined, sentiment); }

ReportFormat parse_report_format(std::string_view name) {
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  if (name == "csv") return ReportFormat::csv;
  throw PreconditionError(fmt::format("unknown report format '{}'", name));
}

std::string render_report(const std::vector<ComparisonRow>& rows, const std::vector<DatasetSweep>& sweeps,
                          ReportFormat format, const std::string& comment) {
  if (rows.empty()) throw PreconditionError("report has no rows");
  std::string out;
  if (format == ReportFormat::markdown) {
    if (!comment.empty()) out += "<!-- " + comment + " -->\n\n";
    out += render_markdown(rows, sweeps);
  } else {
    if (!comment.empty()) out += "# " + comment + "\n";
    out += render_csv(rows);
  }
  return out;
}

}  // namespace topicmetrics
