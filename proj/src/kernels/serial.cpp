#include "row_ops.hpp"

namespace topicmetrics::kernels::serial {

Dense sparse_dense_product(const Sparse& a, const Dense& b) {
  detail::check_product(a.cols(), b.rows());
  Dense out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) detail::sparse_dense_row(a, b, out, i);
  return out;
}

Dense dense_product(const Dense& a, const Dense& b) {
  detail::check_product(a.cols(), b.rows());
  Dense out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) detail::dense_product_row(a, b, out, i);
  return out;
}

Dense gram_cols(const Dense& a) {
  Dense out(a.cols(), a.cols());
  for (Eigen::Index p = 0; p < a.cols(); ++p) detail::gram_cols_row(a, out, p);
  return out;
}

Dense gram_rows(const Dense& a) {
  Dense out(a.rows(), a.rows());
  for (Eigen::Index p = 0; p < a.rows(); ++p) detail::gram_rows_row(a, out, p);
  return out;
}

void multiplicative_update(Dense& factor, const Dense& numer, const Dense& denom, double eps) {
  for (Eigen::Index i = 0; i < factor.rows(); ++i) detail::multiplicative_row(factor, numer, denom, eps, i);
}

void nearest_centroid(const Dense& points, const Dense& centroids, std::span<std::size_t> assignment,
                      std::span<double> dist2) {
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    detail::nearest_centroid_row(points, centroids, assignment.data(), dist2.data(), i);
  }
}

Dense squared_distances(const Dense& queries, const Dense& refs) {
  Dense out(queries.rows(), refs.rows());
  for (Eigen::Index i = 0; i < queries.rows(); ++i) detail::squared_distance_row(queries, refs, out, i);
  return out;
}

WindowCounts count_windows(const std::vector<std::vector<int>>& codes, std::size_t n_words,
                           std::size_t window) {
  detail::check_codes(codes, n_words);
  WindowCounts acc{0, std::vector<std::uint64_t>(n_words, 0), std::vector<std::uint64_t>(n_words * n_words, 0)};
  std::vector<int> in_window(n_words);
  std::vector<std::size_t> present;
  for (const auto& doc : codes) detail::count_document_windows(doc, n_words, window, acc, in_window, present);
  return acc;
}

}  // namespace topicmetrics::kernels::serial
