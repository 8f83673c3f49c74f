#include <doctest.h>

#include <cmath>

#include "topicmetrics/error.hpp"
#include "topicmetrics/random.hpp"
#include "topicmetrics/report.hpp"

using namespace topicmetrics;

namespace {

ComparisonRow row(const std::string& name, double topic, double sentiment, double combined) {
  ComparisonRow r;
  r.dataset = name;
  r.topic = MetricCell{topic, 0.01};
  r.sentiment = MetricCell{sentiment, 0.02};
  r.combined = MetricCell{combined, 0.03};
  return r;
}

}  // namespace

TEST_CASE("point-biserial examples") {
  CHECK(point_biserial({1, 0, 1, 0}, {1, 0, 1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(point_biserial({1, 0, 1, 0}, {-1, 0, -1, 0}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(point_biserial({1, 1, 0, 0}, {0.9, 0.8, 0.1, 0.2}) == doctest::Approx(0.98995).epsilon(1e-5));
  CHECK_THROWS_AS(point_biserial({1, 1, 1}, {0.1, 0.2, 0.3}), PreconditionError);
  CHECK_THROWS_AS(point_biserial({1, 0, 1}, {0.3, 0.3, 0.3}), PreconditionError);
  CHECK_THROWS_AS(point_biserial({1, 0}, {0.3}), PreconditionError);
}

TEST_CASE("point-biserial under affine maps") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 3 + rng.index(30);
    Labels y(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<int>(i < 2 ? i : rng.index(2));
      s[i] = rng.normal();
    }
    const double r = point_biserial(y, s);
    const double a = (rng.uniform() + 0.1) * (rng.index(2) ? 1 : -1) * 5;
    const double b = rng.normal() * 10;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = a * s[i] + b;
    CHECK(point_biserial(y, t) == doctest::Approx(a > 0 ? r : -r).epsilon(1e-9));
  }
}

TEST_CASE("improvement examples") {
  CHECK(improvement(0.8373, 0.7039) == doctest::Approx(18.95).epsilon(3e-4));
  CHECK(std::abs(improvement(0.8373, 0.7039) - 18.95) < 0.005);
  CHECK(std::abs(improvement(0.6516, 0.5705) - 14.22) < 0.005);
  CHECK(improvement(0.5, 0.5) == 0.0);
  CHECK_THROWS_AS(improvement(0.5, 0.0), PreconditionError);
}

TEST_CASE("markdown bolds the row maximum") {
  const std::vector<ComparisonRow> rows{row("WM", 0.9347, 0.9281, 0.9366), row("KC", 0.8373, 0.7039, 0.8354)};
  const auto md = render_report(rows, {}, ReportFormat::markdown);
  CHECK(md.find("| WM | 0.9347 (0.0100) | 0.9281 (0.0200) | **0.9366** (0.0300) | n/a |") != std::string::npos);
  CHECK(md.find("| KC | **0.8373** (0.0100) | 0.7039 (0.0200) | 0.8354 (0.0300) | n/a |") != std::string::npos);
  CHECK(md.find("| KC | 18.95 | 18.68 | n/a |") != std::string::npos);
  CHECK(md == render_report(rows, {}, ReportFormat::markdown));
}

TEST_CASE("ties are all bold and missing cells read n/a") {
  ComparisonRow r = row("T", 0.5, 0.4, 0.5);
  r.sentiment.reset();
  const auto md = render_report({r}, {}, ReportFormat::markdown);
  CHECK(md.find("| T | **0.5000** (0.0100) | n/a | **0.5000** (0.0300) | n/a |") != std::string::npos);
  CHECK(md.find("| T | n/a | n/a | n/a |") != std::string::npos);
}

TEST_CASE("csv golden output") {
  ComparisonRow r = row("MOTN", 0.6030, 0.5705, 0.6516);
  r.corr = 0.51;
  r.coherence_best = 0.5113;
  const auto csv = render_report({r}, {}, ReportFormat::csv);
  CHECK(csv ==
        "dataset,f1_topic,sd_topic,f1_sentiment,sd_sentiment,f1_combined,sd_combined,corr,impr_topic_pct,"
        "impr_combined_pct,coherence_best\n"
        "MOTN,0.6030,0.0100,0.5705,0.0200,0.6516,0.0300,0.5100,5.70,14.22,0.5113\n");
  ComparisonRow bare;
  bare.dataset = "X";
  bare.topic = MetricCell{0.7, 0.0};
  CHECK(render_report({bare}, {}, ReportFormat::csv).substr(csv.find('\n') + 1) == "X,0.7000,0.0000,,,,,,,,\n");
  CHECK(render_report({bare}, {}, ReportFormat::csv, "{}").rfind("# {}\n", 0) == 0);
  CHECK_THROWS_AS(render_report({}, {}, ReportFormat::csv), PreconditionError);
  bare.dataset = "a,b";
  CHECK_THROWS_AS(render_report({bare}, {}, ReportFormat::csv), PreconditionError);
}

TEST_CASE("markdown sweep section") {
  SweepResult s;
  s.rows = {{ModelKind::lda, 5, "", 0.4006}, {ModelKind::nmf, 5, "", 0.6329}, {ModelKind::cluster, 5, "", 0.7539}};
  const auto md = render_report({row("WM", 0.9, 0.8, 0.85)}, {{"WM", s}}, ReportFormat::markdown);
  CHECK(md.find("## Coherence sweep: WM (npmi)") != std::string::npos);
  CHECK(md.find("| cluster | 0.7539 |") != std::string::npos);
  CHECK(md.find("Cluster enhancement over best baseline: 19.12%") != std::string::npos);
  s.rows.pop_back();
  const auto partial = render_report({row("WM", 0.9, 0.8, 0.85)}, {{"WM", s}}, ReportFormat::markdown);
  CHECK(partial.find("Cluster enhancement over best baseline: n/a") != std::string::npos);
}

TEST_CASE("report format names") {
  CHECK(parse_report_format("md") == ReportFormat::markdown);
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_report_format("html"), PreconditionError);
}
