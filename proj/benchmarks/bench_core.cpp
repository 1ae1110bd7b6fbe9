#include <benchmark/benchmark.h>

#include <random>

#include "khom/categorical.hpp"
#include "khom/chain_maps.hpp"
#include "khom/cubical.hpp"
#include "khom/exact_linalg.hpp"
#include "khom/kgraph.hpp"

namespace {

using namespace khom;

SparseIntMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, entry(rng));
  return m;
}

void BM_SnfRandomDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SparseIntMatrix m = random_matrix(n, n, 42);
  for (auto _ : state) {
    SnfResult s = snf(m);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(BM_SnfRandomDense)->Arg(8)->Arg(16)->Arg(24);

void BM_BoundaryMatrixOmega(benchmark::State& state) {
  KGraph g = omega(2, Degree({2, 2}));
  for (auto _ : state) {
    SparseIntMatrix m = boundary_matrix(g, 2, false);
    benchmark::DoNotOptimize(m.entries().size());
  }
}
BENCHMARK(BM_BoundaryMatrixOmega);

void BM_CubicalHomologyOmega(benchmark::State& state) {
  KGraph g = omega(2, Degree({2, 2}));
  for (auto _ : state) {
    AbelianGroup h = cubical_homology(g, 1, Coefficients::integers(), true);
    benchmark::DoNotOptimize(h.free_rank);
  }
}
BENCHMARK(BM_CubicalHomologyOmega);

void BM_CubulateTorusTuples(benchmark::State& state) {
  KGraph g = torus2();
  auto tuples = tuples_up_to(g, 3, Degree({2, 2})).tuples;
  for (auto _ : state) {
    std::size_t terms = 0;
    for (const auto& t : tuples) terms += cubulate(g, t).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_CubulateTorusTuples);

void BM_VerifyIdentitiesTorus(benchmark::State& state) {
  KGraph g = torus2();
  for (auto _ : state) {
    VerifyReport rep = verify_chain_map_identities(g, Degree({2, 2}));
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_VerifyIdentitiesTorus);

}  // namespace

BENCHMARK_MAIN();
