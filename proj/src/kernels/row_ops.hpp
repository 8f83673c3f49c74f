#pragma once

// Per-row bodies shared by the serial and OpenMP kernels. Keeping one body
// per output row is what makes the two variants bit-identical.

#include <algorithm>
#include <limits>

#include "topicmetrics/error.hpp"
#include "topicmetrics/kernels.hpp"

namespace topicmetrics::kernels::detail {

inline void sparse_dense_row(const Sparse& a, const Dense& b, Dense& out, Eigen::Index i) {
  auto row = out.row(i);
  row.setZero();
  for (Sparse::InnerIterator it(a, i); it; ++it) row.noalias() += it.value() * b.row(it.col());
}

inline void dense_product_row(const Dense& a, const Dense& b, Dense& out, Eigen::Index i) {
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
    out(i, j) = s;
  }
}

inline void gram_cols_row(const Dense& a, Dense& out, Eigen::Index p) {
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    double s = 0.0;
    for (Eigen::Index r = 0; r < a.rows(); ++r) s += a(r, p) * a(r, q);
    out(p, q) = s;
  }
}

inline void gram_rows_row(const Dense& a, Dense& out, Eigen::Index p) {
  for (Eigen::Index q = 0; q < a.rows(); ++q) {
    double s = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) s += a(p, c) * a(q, c);
    out(p, q) = s;
  }
}

inline void multiplicative_row(Dense& factor, const Dense& numer, const Dense& denom, double eps,
                               Eigen::Index i) {
  for (Eigen::Index j = 0; j < factor.cols(); ++j) {
    factor(i, j) = factor(i, j) * numer(i, j) / (denom(i, j) + eps);
  }
}

inline void nearest_centroid_row(const Dense& points, const Dense& centroids, std::size_t* assignment,
                                 double* dist2, Eigen::Index i) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_c = 0;
  for (Eigen::Index c = 0; c < centroids.rows(); ++c) {
    double d = 0.0;
    for (Eigen::Index k = 0; k < points.cols(); ++k) {
      const double diff = points(i, k) - centroids(c, k);
      d += diff * diff;
    }
    if (d < best) {
      best = d;
      best_c = static_cast<std::size_t>(c);
    }
  }
  assignment[i] = best_c;
  dist2[i] = best;
}

inline void squared_distance_row(const Dense& queries, const Dense& refs, Dense& out, Eigen::Index i) {
  for (Eigen::Index r = 0; r < refs.rows(); ++r) {
    double d = 0.0;
    for (Eigen::Index k = 0; k < queries.cols(); ++k) {
      const double diff = queries(i, k) - refs(r, k);
      d += diff * diff;
    }
    out(i, r) = d;
  }
}

// Adds the windows of one document into `acc`. `in_window` and `present` are
// caller-provided buffers of size n_words.
inline void count_document_windows(const std::vector<int>& codes, std::size_t n_words, std::size_t window,
                                   WindowCounts& acc, std::vector<int>& in_window,
                                   std::vector<std::size_t>& present) {
  auto record = [&] {
    present.clear();
    for (std::size_t w = 0; w < n_words; ++w) {
      if (in_window[w] > 0) present.push_back(w);
    }
    for (std::size_t a = 0; a < present.size(); ++a) {
      ++acc.single[present[a]];
      for (std::size_t b = a + 1; b < present.size(); ++b) ++acc.pair[present[a] * n_words + present[b]];
    }
    ++acc.windows;
  };
  const std::size_t len = codes.size();
  if (len == 0) return;
  std::fill(in_window.begin(), in_window.end(), 0);
  const std::size_t w = (window == 0 || len <= window) ? len : window;
  for (std::size_t p = 0; p < w; ++p) {
    if (codes[p] >= 0) ++in_window[static_cast<std::size_t>(codes[p])];
  }
  record();
  for (std::size_t start = 1; start + w <= len; ++start) {
    const int out = codes[start - 1];
    const int in = codes[start + w - 1];
    if (out >= 0) --in_window[static_cast<std::size_t>(out)];
    if (in >= 0) ++in_window[static_cast<std::size_t>(in)];
    record();
  }
}

inline void check_codes(const std::vector<std::vector<int>>& codes, std::size_t n_words) {
  for (const auto& doc : codes) {
    for (int c : doc) {
      if (c >= static_cast<int>(n_words)) throw PreconditionError("window code out of range");
    }
  }
}

inline void check_product(Eigen::Index inner_a, Eigen::Index inner_b) {
  if (inner_a != inner_b) throw PreconditionError("matrix product dimension mismatch");
}

}  // namespace topicmetrics::kernels::detail
