#include <algorithm>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "topicmetrics/error.hpp"
#include "topicmetrics/topics.hpp"

namespace topicmetrics {
namespace {

Dense seed_plus_plus(const Dense& points, std::size_t k, Rng& rng) {
  const auto n = static_cast<std::size_t>(points.rows());
  Dense centroids(static_cast<Eigen::Index>(k), points.cols());
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::size_t pick = static_cast<std::size_t>(rng.index(n));
  for (std::size_t c = 0; c < k; ++c) {
    if (c > 0) {
      const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
      if (total > 0.0) {
        const double u = rng.uniform() * total;
        double acc = 0.0;
        pick = n;
        for (std::size_t i = 0; i < n; ++i) {
          if (d2[i] <= 0.0) continue;
          acc += d2[i];
          pick = i;
          if (acc > u) break;
        }
      } else {
        pick = static_cast<std::size_t>(rng.index(n));
      }
    }
    centroids.row(static_cast<Eigen::Index>(c)) = points.row(static_cast<Eigen::Index>(pick));
    for (std::size_t i = 0; i < n; ++i) {
      const double d = (points.row(static_cast<Eigen::Index>(i)) - centroids.row(static_cast<Eigen::Index>(c))).squaredNorm();
      d2[i] = std::min(d2[i], d);
    }
  }
  return centroids;
}

// Moves centroids to their cluster means. Clusters left empty are reseeded
// at the points farthest from their current centroids.
void update_centroids(const Dense& points, const std::vector<std::size_t>& labels, std::vector<double> dist2,
                      Dense& centroids) {
  const auto k = static_cast<std::size_t>(centroids.rows());
  Dense sums = Dense::Zero(centroids.rows(), centroids.cols());
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    sums.row(static_cast<Eigen::Index>(labels[i])) += points.row(static_cast<Eigen::Index>(i));
    ++counts[labels[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto ci = static_cast<Eigen::Index>(c);
    if (counts[c] > 0) {
      centroids.row(ci) = sums.row(ci) / static_cast<double>(counts[c]);
      continue;
    }
    const auto far = static_cast<std::size_t>(std::max_element(dist2.begin(), dist2.end()) - dist2.begin());
    centroids.row(ci) = points.row(static_cast<Eigen::Index>(far));
    dist2[far] = -1.0;
  }
}

double assign(const Dense& points, const Dense& centroids, std::vector<std::size_t>& labels,
              std::vector<double>& dist2) {
  kernels::omp::nearest_centroid(points, centroids, labels, dist2);
  double sse = 0.0;
  for (double d : dist2) sse += d;
  return sse;
}

// Only reachable with duplicate points: gives every empty cluster one member.
void fill_empty_clusters(const Dense& points, std::vector<std::size_t>& labels, std::vector<double>& dist2,
                         Dense& centroids) {
  const auto k = static_cast<std::size_t>(centroids.rows());
  std::vector<std::size_t> counts(k, 0);
  for (auto l : labels) ++counts[l];
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] > 0) continue;
    std::size_t donor = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (counts[labels[i]] > 1 && (donor == labels.size() || dist2[i] > dist2[donor])) donor = i;
    }
    --counts[labels[donor]];
    ++counts[c];
    labels[donor] = c;
    dist2[donor] = 0.0;
    centroids.row(static_cast<Eigen::Index>(c)) = points.row(static_cast<Eigen::Index>(donor));
  }
}

void relabel_by_first_appearance(KMeansResult& r) {
  const auto k = static_cast<std::size_t>(r.centroids.rows());
  std::vector<std::size_t> remap(k, k);
  std::size_t next = 0;
  for (auto l : r.labels) {
    if (remap[l] == k) remap[l] = next++;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (remap[c] == k) remap[c] = next++;
  }
  Dense sorted(r.centroids.rows(), r.centroids.cols());
  for (std::size_t c = 0; c < k; ++c) sorted.row(static_cast<Eigen::Index>(remap[c])) = r.centroids.row(static_cast<Eigen::Index>(c));
  r.centroids = std::move(sorted);
  for (auto& l : r.labels) l = remap[l];
}

}  // namespace

KMeansResult kmeans(const Dense& points, std::size_t k, std::uint64_t seed, const KMeansOptions& options) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k < 1) throw PreconditionError("k-means needs k >= 1");
  if (k > n) throw PreconditionError(fmt::format("K = {} exceeds {} points", k, n));
  if (options.max_iterations < 1 || options.restarts < 1) {
    throw PreconditionError("k-means needs at least one iteration and one restart");
  }
  Rng rng(seed);
  KMeansResult best;
  best.sse = std::numeric_limits<double>::infinity();
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    KMeansResult run;
    run.centroids = seed_plus_plus(points, k, rng);
    run.labels.assign(n, 0);
    std::vector<double> dist2(n, 0.0);
    run.sse_history.push_back(assign(points, run.centroids, run.labels, dist2));
    for (std::size_t it = 1; it < options.max_iterations; ++it) {
      update_centroids(points, run.labels, dist2, run.centroids);
      const auto previous = run.labels;
      run.sse_history.push_back(assign(points, run.centroids, run.labels, dist2));
      run.iterations = it;
      if (run.labels == previous) break;
    }
    fill_empty_clusters(points, run.labels, dist2, run.centroids);
    run.sse = std::accumulate(dist2.begin(), dist2.end(), 0.0);
    if (run.sse < best.sse) best = std::move(run);
  }
  relabel_by_first_appearance(best);
  return best;
}

}  // namespace topicmetrics
