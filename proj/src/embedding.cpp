#include "topicmetrics/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <fmt/format.h>

#include "topicmetrics/error.hpp"
#include "topicmetrics/io.hpp"
#include "topicmetrics/random.hpp"

namespace topicmetrics {
namespace {

constexpr char kMagic[4] = {'E', 'M', 'B', '1'};
constexpr std::size_t kHeaderSize = 12;

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void append_u32le(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

// Orthonormal basis for the column space of y (thin Householder QR).
Dense orthonormalize(const Dense& y) {
  Eigen::HouseholderQR<Dense> qr(y);
  Dense q = qr.householderQ() * Dense::Identity(y.rows(), y.cols());
  return q;
}

template <typename Matrix>
void fix_column_signs(Matrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > best_abs) {
        best_abs = std::abs(m(r, c));
        best = r;
      }
    }
    if (m.rows() > 0 && m(best, c) < 0.0) m.col(c) *= -1.0;
  }
}

}  // namespace

EmbeddingMatrix parse_embeddings(const std::string& bytes, std::size_t expected_n) {
  if (bytes.size() < kHeaderSize || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw DataError("bad magic: not an EMB1 file");
  }
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::uint64_t n = read_u32le(p + 4);
  const std::uint64_t dim = read_u32le(p + 8);
  if (bytes.size() - kHeaderSize != n * dim * 4) {
    throw DataError(fmt::format("payload size mismatch: header says {}x{} floats, found {} bytes", n, dim,
                                bytes.size() - kHeaderSize));
  }
  if (n != expected_n) {
    throw DataError(fmt::format("row count mismatch: file has {} rows, corpus has {}", n, expected_n));
  }
  EmbeddingMatrix emb;
  emb.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  const unsigned char* payload = p + kHeaderSize;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      const auto bits = read_u32le(payload + 4 * (i * dim + j));
      const float f = std::bit_cast<float>(bits);
      if (!std::isfinite(f)) throw DataError(fmt::format("non-finite value at row {}, column {}", i, j));
      emb.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f;
    }
  }
  return emb;
}

EmbeddingMatrix load_embeddings(const std::filesystem::path& path, std::size_t expected_n) {
  return parse_embeddings(io::read_file(path), expected_n);
}

std::string serialize_embeddings(const EmbeddingMatrix& emb) {
  std::string out(kMagic, 4);
  append_u32le(out, static_cast<std::uint32_t>(emb.n_docs()));
  append_u32le(out, static_cast<std::uint32_t>(emb.dim()));
  out.reserve(kHeaderSize + emb.n_docs() * emb.dim() * 4);
  for (Eigen::Index i = 0; i < emb.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < emb.values.cols(); ++j) {
      append_u32le(out, std::bit_cast<std::uint32_t>(static_cast<float>(emb.values(i, j))));
    }
  }
  return out;
}

Dense randomized_right_subspace(const Sparse& a, std::size_t dim, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(a.rows());
  const auto m = static_cast<std::size_t>(a.cols());
  if (n == 0 || m == 0) throw PreconditionError("cannot factor an empty matrix");
  if (dim < 1 || dim > std::min(n, m)) {
    throw PreconditionError(fmt::format("dim must be in [1, {}], got {}", std::min(n, m), dim));
  }
  constexpr std::size_t kOversample = 8;
  constexpr int kPowerIterations = 2;
  const auto width = static_cast<Eigen::Index>(std::min(dim + kOversample, std::min(n, m)));

  Rng rng(seed);
  Dense omega(static_cast<Eigen::Index>(m), width);
  for (Eigen::Index i = 0; i < omega.rows(); ++i) {
    for (Eigen::Index j = 0; j < width; ++j) omega(i, j) = rng.normal();
  }
  const Sparse at = a.transpose();

  Dense q = orthonormalize(kernels::omp::sparse_dense_product(a, omega));
  for (int it = 0; it < kPowerIterations; ++it) {
    const Dense z = orthonormalize(kernels::omp::sparse_dense_product(at, q));
    q = orthonormalize(kernels::omp::sparse_dense_product(a, z));
  }
  // B^T = A^T Q is m x width; its left singular vectors are B's right ones.
  const Dense bt = kernels::omp::sparse_dense_product(at, q);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(bt), Eigen::ComputeThinU);
  Dense basis = svd.matrixU().leftCols(static_cast<Eigen::Index>(dim));
  fix_column_signs(basis);
  return basis;
}

EmbeddingMatrix lsa_embed(const DocTermMatrix& dtm, std::size_t dim, std::uint64_t seed) {
  const Dense basis = randomized_right_subspace(dtm.values, dim, seed);
  EmbeddingMatrix emb;
  emb.values = kernels::omp::sparse_dense_product(dtm.values, basis);
  for (Eigen::Index i = 0; i < emb.values.rows(); ++i) {
    const double norm = emb.values.row(i).norm();
    if (norm > 0.0) emb.values.row(i) /= norm;
  }
  return emb;
}

EmbeddingMatrix reduce_dim(const EmbeddingMatrix& emb, std::size_t target_dim, std::uint64_t /*seed*/) {
  if (target_dim < 1 || target_dim > emb.dim()) {
    throw PreconditionError(fmt::format("target_dim must be in [1, {}], got {}", emb.dim(), target_dim));
  }
  if (emb.n_docs() == 0) throw PreconditionError("cannot reduce an empty embedding matrix");
  const Eigen::RowVectorXd mean = emb.values.colwise().mean();
  const Dense centered = emb.values.rowwise() - mean;
  const Eigen::MatrixXd scatter = kernels::omp::gram_cols(centered);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(scatter);
  if (eig.info() != Eigen::Success) throw Error("eigendecomposition failed");
  // Eigenvalues ascend; take the trailing columns in reverse.
  const auto d = static_cast<Eigen::Index>(emb.dim());
  const auto k = static_cast<Eigen::Index>(target_dim);
  Dense axes(d, k);
  for (Eigen::Index c = 0; c < k; ++c) axes.col(c) = eig.eigenvectors().col(d - 1 - c);
  fix_column_signs(axes);
  EmbeddingMatrix out;
  out.values = kernels::omp::dense_product(centered, axes);
  return out;
}

}  // namespace topicmetrics
