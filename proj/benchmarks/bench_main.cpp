#include <benchmark/benchmark.h>

#include <random>

#include "knotforge/braid.hpp"
#include "knotforge/cli/catalog.hpp"
#include "knotforge/f2_matrix.hpp"
#include "knotforge/grid_homology.hpp"
#include "knotforge/seifert.hpp"

using namespace knotforge;

namespace {

GridDiagram catalog_grid(const std::string& name) {
  return *cli::find_catalog_entry(KNOTFORGE_DEFAULT_CATALOG, name).grid;
}

void BM_F2Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::bernoulli_distribution bit(0.05);
  std::vector<F2SparseMatrix::Column> cols(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (bit(rng)) cols[c].push_back(static_cast<F2SparseMatrix::Column::value_type>(r));
    }
  }
  const F2SparseMatrix m(n, cols);
  for (auto _ : state) benchmark::DoNotOptimize(f2_rank(m));
}
BENCHMARK(BM_F2Rank)->Arg(256)->Arg(1024)->Arg(4096);

void BM_TildeHomology(benchmark::State& state, const std::string& name, int stabilizations) {
  GridDiagram g = catalog_grid(name);
  for (int k = 0; k < stabilizations; ++k) g = stabilize(g, 0);
  HomologyLimits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tilde_homology(g, limits));
  state.SetLabel("size " + std::to_string(g.size()));
}
BENCHMARK_CAPTURE(BM_TildeHomology, trefoil, std::string("trefoil"), 0)->Arg(1);
BENCHMARK_CAPTURE(BM_TildeHomology, torus_2_5, std::string("torus_2_5"), 0)->Arg(1);
BENCHMARK_CAPTURE(BM_TildeHomology, knot_9_46, std::string("9_46"), 0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TildeHomology, knot_9_46_size9, std::string("9_46"), 1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TildeHomology, knot_9_46_size10, std::string("9_46"), 2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void BM_BurauAlexander(benchmark::State& state) {
  // (s1 s2 s3 s4 s5)^k closes to a knot for k prime to 6.
  std::vector<int> word;
  for (int k = 0; k < state.range(0); ++k) {
    for (int g = 1; g <= 5; ++g) word.push_back(g);
  }
  const BraidWord b(6, word);
  for (auto _ : state) benchmark::DoNotOptimize(burau_alexander(b));
}
BENCHMARK(BM_BurauAlexander)->Arg(5)->Arg(11);

void BM_Rho0(benchmark::State& state) {
  std::vector<int> word(static_cast<std::size_t>(state.range(0)), 1);
  const SeifertMatrix v = seifert_matrix_from_braid(BraidWord(2, word));
  for (auto _ : state) benchmark::DoNotOptimize(rho0(v));
  state.SetLabel("T(2," + std::to_string(state.range(0)) + ")");
}
BENCHMARK(BM_Rho0)->Arg(3)->Arg(9)->Arg(21);

}  // namespace
BENCHMARK_MAIN();
