#include "row_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topicmetrics::kernels::omp {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Dense sparse_dense_product(const Sparse& a, const Dense& b) {
  detail::check_product(a.cols(), b.rows());
  Dense out(a.rows(), b.cols());
  const Eigen::Index n = a.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) detail::sparse_dense_row(a, b, out, i);
  return out;
}

Dense dense_product(const Dense& a, const Dense& b) {
  detail::check_product(a.cols(), b.rows());
  Dense out(a.rows(), b.cols());
  const Eigen::Index n = a.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) detail::dense_product_row(a, b, out, i);
  return out;
}

Dense gram_cols(const Dense& a) {
  Dense out(a.cols(), a.cols());
  const Eigen::Index n = a.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index p = 0; p < n; ++p) detail::gram_cols_row(a, out, p);
  return out;
}

Dense gram_rows(const Dense& a) {
  Dense out(a.rows(), a.rows());
  const Eigen::Index n = a.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index p = 0; p < n; ++p) detail::gram_rows_row(a, out, p);
  return out;
}

void multiplicative_update(Dense& factor, const Dense& numer, const Dense& denom, double eps) {
  const Eigen::Index n = factor.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) detail::multiplicative_row(factor, numer, denom, eps, i);
}

void nearest_centroid(const Dense& points, const Dense& centroids, std::span<std::size_t> assignment,
                      std::span<double> dist2) {
  const Eigen::Index n = points.rows();
  std::size_t* assign_out = assignment.data();
  double* dist_out = dist2.data();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    detail::nearest_centroid_row(points, centroids, assign_out, dist_out, i);
  }
}

Dense squared_distances(const Dense& queries, const Dense& refs) {
  Dense out(queries.rows(), refs.rows());
  const Eigen::Index n = queries.rows();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) detail::squared_distance_row(queries, refs, out, i);
  return out;
}

// Counts are integers, so merging thread-local tallies is order-independent.
WindowCounts count_windows(const std::vector<std::vector<int>>& codes, std::size_t n_words,
                           std::size_t window) {
  detail::check_codes(codes, n_words);
  WindowCounts total{0, std::vector<std::uint64_t>(n_words, 0), std::vector<std::uint64_t>(n_words * n_words, 0)};
  const auto n_docs = static_cast<std::ptrdiff_t>(codes.size());
#pragma omp parallel
  {
    WindowCounts local{0, std::vector<std::uint64_t>(n_words, 0), std::vector<std::uint64_t>(n_words * n_words, 0)};
    std::vector<int> in_window(n_words);
    std::vector<std::size_t> present;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t d = 0; d < n_docs; ++d) {
      detail::count_document_windows(codes[static_cast<std::size_t>(d)], n_words, window, local, in_window, present);
    }
#pragma omp critical(topicmetrics_count_windows)
    {
      total.windows += local.windows;
      for (std::size_t i = 0; i < n_words; ++i) total.single[i] += local.single[i];
      for (std::size_t i = 0; i < total.pair.size(); ++i) total.pair[i] += local.pair[i];
    }
  }
  return total;
}

}  // namespace topicmetrics::kernels::omp
