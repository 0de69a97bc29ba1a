#include <benchmark/benchmark.h>

#include <random>

#include "trimat/matroid.hpp"
#include "trimat/tiler.hpp"
#include "trimat/verify.hpp"

using namespace trimat;

namespace {

CellSet random_subset(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CellSet s(n);
  for (int i = 0; i < up_cell_count(n); ++i)
    if (rng() & 1) s.insert_index(i);
  return s;
}

void BM_independence(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TilingMatroid m(n);
  std::vector<CellSet> sets;
  for (std::uint64_t k = 0; k < 64; ++k) sets.push_back(random_subset(n, k));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.is_independent(sets[i++ & 63]));
  }
}
BENCHMARK(BM_independence)->Arg(5)->Arg(8)->Arg(12);

void BM_rank(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TilingMatroid m(n);
  CellSet s = random_subset(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank(s));
}
BENCHMARK(BM_rank)->Arg(5)->Arg(8)->Arg(12);

void BM_max_rhombi(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HoleyRegion region(n, random_subset(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(max_rhombi_count(region));
}
BENCHMARK(BM_max_rhombi)->Arg(6)->Arg(10)->Arg(14);

void BM_trapezoid_cover(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TilingMatroid m(n);
  // a guaranteed-independent hole set: one cell per row
  CellSet s(n);
  for (int c = 0; c < n; ++c) s.insert(UpCell{n - 1 - c, 0, c});
  TileKindSet kinds{TileKind::Rhombus, TileKind::Trap1};
  for (auto _ : state) {
    auto t = tile_exact(HoleyRegion(n, s), kinds);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_trapezoid_cover)->Arg(4)->Arg(6)->Arg(8);

void BM_verify_rank_numerology(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TilingMatroid m(n);
  VerifySettings settings;
  settings.budget = 2000;
  for (auto _ : state) {
    VerifyReport r = check(m, TheoremId::RankNumerology, settings);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_verify_rank_numerology)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
