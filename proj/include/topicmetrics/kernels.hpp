#pragma once

// Data-parallel inner loops. `serial` is the reference implementation kept
// for testing; `omp` distributes the same loops with OpenMP. Every kernel
// assigns each output element to one thread and accumulates in a fixed
// order, so both variants produce bit-identical results at any thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace topicmetrics {

using Dense = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

namespace kernels {

/// Boolean sliding-window co-occurrence counts for a small word set.
/// `single[i]` counts windows containing word i; `pair` is row-major
/// n_words x n_words with the upper triangle (i < j) filled.
struct WindowCounts {
  std::uint64_t windows = 0;
  std::vector<std::uint64_t> single;
  std::vector<std::uint64_t> pair;
};

namespace serial {

/// a * b
Dense sparse_dense_product(const Sparse& a, const Dense& b);
/// a * b for small dense operands.
Dense dense_product(const Dense& a, const Dense& b);
/// a^T * a
Dense gram_cols(const Dense& a);
/// a * a^T
Dense gram_rows(const Dense& a);
/// factor <- factor .* numer ./ (denom + eps)
void multiplicative_update(Dense& factor, const Dense& numer, const Dense& denom, double eps);
/// Nearest centroid per point (ties -> lowest index) and its squared distance.
void nearest_centroid(const Dense& points, const Dense& centroids, std::span<std::size_t> assignment,
                      std::span<double> dist2);
/// queries x refs squared Euclidean distances.
Dense squared_distances(const Dense& queries, const Dense& refs);
/// codes[d][pos] is a word id in [0, n_words) or -1. window == 0 treats each
/// document as one window; documents shorter than the window are one window.
WindowCounts count_windows(const std::vector<std::vector<int>>& codes, std::size_t n_words,
                           std::size_t window);

}  // namespace serial

namespace omp {

Dense sparse_dense_product(const Sparse& a, const Dense& b);
Dense dense_product(const Dense& a, const Dense& b);
Dense gram_cols(const Dense& a);
Dense gram_rows(const Dense& a);
void multiplicative_update(Dense& factor, const Dense& numer, const Dense& denom, double eps);
void nearest_centroid(const Dense& points, const Dense& centroids, std::span<std::size_t> assignment,
                      std::span<double> dist2);
Dense squared_distances(const Dense& queries, const Dense& refs);
WindowCounts count_windows(const std::vector<std::vector<int>>& codes, std::size_t n_words,
                           std::size_t window);

/// Threads a parallel region would use (1 without OpenMP).
int max_threads();

}  // namespace omp
}  // namespace kernels
}  // namespace topicmetrics
