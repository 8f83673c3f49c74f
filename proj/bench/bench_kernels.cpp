#include <benchmark/benchmark.h>

#include <vector>

#include "topicmetrics/kernels.hpp"
#include "topicmetrics/random.hpp"

namespace tk = topicmetrics::kernels;
using topicmetrics::Dense;
using topicmetrics::Sparse;

namespace {

Dense random_dense(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  topicmetrics::Rng rng(seed);
  Dense m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform();
  return m;
}

// Roughly 1% dense, like a short-text document-term matrix.
Sparse random_sparse(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  topicmetrics::Rng rng(seed);
  std::vector<Eigen::Triplet<double>> entries;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (int e = 0; e < cols / 100 + 1; ++e) {
      entries.emplace_back(r, static_cast<Eigen::Index>(rng.index(static_cast<std::uint64_t>(cols))), 1.0);
    }
  }
  Sparse m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

std::vector<std::vector<int>> random_codes(std::size_t docs, std::size_t len, std::size_t n_words) {
  topicmetrics::Rng rng(7);
  std::vector<std::vector<int>> codes(docs, std::vector<int>(len));
  for (auto& d : codes) {
    for (auto& c : d) {
      const auto r = rng.index(n_words * 4);
      c = r < n_words ? static_cast<int>(r) : -1;
    }
  }
  return codes;
}

template <Dense (*F)(const Sparse&, const Dense&)>
void BM_SparseDense(benchmark::State& state) {
  const auto a = random_sparse(state.range(0), 5000, 1);
  const auto b = random_dense(5000, 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <Dense (*F)(const Dense&)>
void BM_GramRows(benchmark::State& state) {
  const auto a = random_dense(state.range(0), 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(F(a));
}

template <Dense (*F)(const Dense&, const Dense&)>
void BM_SquaredDistances(benchmark::State& state) {
  const auto q = random_dense(state.range(0), 10, 4);
  const auto r = random_dense(state.range(0), 10, 5);
  for (auto _ : state) benchmark::DoNotOptimize(F(q, r));
}

template <tk::WindowCounts (*F)(const std::vector<std::vector<int>>&, std::size_t, std::size_t)>
void BM_CountWindows(benchmark::State& state) {
  const auto codes = random_codes(static_cast<std::size_t>(state.range(0)), 40, 10);
  for (auto _ : state) benchmark::DoNotOptimize(F(codes, 10, 10));
}

}  // namespace

BENCHMARK(BM_SparseDense<tk::serial::sparse_dense_product>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SparseDense<tk::omp::sparse_dense_product>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_GramRows<tk::serial::gram_rows>)->Arg(500)->Arg(2000);
BENCHMARK(BM_GramRows<tk::omp::gram_rows>)->Arg(500)->Arg(2000);
BENCHMARK(BM_SquaredDistances<tk::serial::squared_distances>)->Arg(500)->Arg(2000);
BENCHMARK(BM_SquaredDistances<tk::omp::squared_distances>)->Arg(500)->Arg(2000);
BENCHMARK(BM_CountWindows<tk::serial::count_windows>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_CountWindows<tk::omp::count_windows>)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
