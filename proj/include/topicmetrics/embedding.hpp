#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "topicmetrics/corpus.hpp"
#include "topicmetrics/kernels.hpp"

namespace topicmetrics {

/// Dense document vectors; row i belongs to documents[i].
struct EmbeddingMatrix {
  Dense values;

  std::size_t n_docs() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(values.cols()); }
};

// EMB1: "EMB1", u32le n_docs, u32le dim, then n_docs*dim f32le row-major.
EmbeddingMatrix parse_embeddings(const std::string& bytes, std::size_t expected_n);
EmbeddingMatrix load_embeddings(const std::filesystem::path& path, std::size_t expected_n);
/// Values are narrowed to float32.
std::string serialize_embeddings(const EmbeddingMatrix& emb);

/// Orthonormal basis (n_terms x dim) for the leading right singular subspace
/// of `a`, by randomized subspace iteration with 8 oversampling columns and
/// two power iterations. Columns are ordered by singular value, with signs
/// fixed so each column's largest-magnitude entry is positive.
Dense randomized_right_subspace(const Sparse& a, std::size_t dim, std::uint64_t seed);

/// Latent semantic embedding: TF-IDF rows projected onto the leading right
/// singular subspace, then L2-normalized (zero rows stay zero).
EmbeddingMatrix lsa_embed(const DocTermMatrix& dtm, std::size_t dim, std::uint64_t seed);

/// PCA projection of the mean-centered rows onto the top `target_dim`
/// principal axes. The eigensolver is deterministic, so `seed` is accepted
/// for interface stability but does not influence the result.
EmbeddingMatrix reduce_dim(const EmbeddingMatrix& emb, std::size_t target_dim, std::uint64_t seed);

}  // namespace topicmetrics
