// Serial reference vs OpenMP kernel for each parallel code path.

#include "polyalg/enumerate.hpp"
#include "polyalg/groebner.hpp"
#include "polyalg/oracle.hpp"
#include "polyalg/rook.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>
#include <set>

using namespace polyalg;

namespace {

// Fixed-seed thin polyomino of the given rank: random growth that never
// completes a 2x2 block.
Polyomino thin_polyomino(int rank) {
  std::mt19937 rng(12345);
  std::vector<Cell> cells{Cell{0, 0}};
  std::set<Cell> taken{Cell{0, 0}};
  auto makes_block = [&](Cell c) {
    for (int dx : {-1, 0})
      for (int dy : {-1, 0}) {
        int filled = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            const Cell q{c.x + dx + i, c.y + dy + j};
            filled += q == c || taken.count(q);
          }
        if (filled == 4) return true;
      }
    return false;
  };
  while (static_cast<int>(cells.size()) < rank) {
    const Cell base = cells[rng() % cells.size()];
    static constexpr int dx[] = {1, -1, 0, 0};
    static constexpr int dy[] = {0, 0, 1, -1};
    const int k = static_cast<int>(rng() % 4);
    const Cell next{base.x + dx[k], base.y + dy[k]};
    if (taken.count(next) || makes_block(next)) continue;
    taken.insert(next);
    cells.push_back(next);
  }
  return Polyomino(std::move(cells));
}

void BM_RookSerial(benchmark::State& state) {
  const auto p = thin_polyomino(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::rook_polynomial_bruteforce(p));
}

void BM_RookOpenMP(benchmark::State& state) {
  const auto p = thin_polyomino(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rook_polynomial_bruteforce(p));
}

std::vector<Monomial> leads_of(const Polyomino& p, unsigned cap) {
  return buchberger(inner_2_minors(p), default_term_order(p), cap).leading_monomials();
}

void BM_StandardMonomialsSerial(benchmark::State& state) {
  const auto p = thin_polyomino(6);
  const auto up_to = static_cast<unsigned>(state.range(0));
  const auto leads = leads_of(p, up_to + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::count_standard_monomials(leads, p.vertices().size(), up_to));
}

void BM_StandardMonomialsOpenMP(benchmark::State& state) {
  const auto p = thin_polyomino(6);
  const auto up_to = static_cast<unsigned>(state.range(0));
  const auto leads = leads_of(p, up_to + 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_standard_monomials(leads, p.vertices().size(), up_to));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto corpus = enumerate_fixed(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::conjecture_scan(corpus));
}

void BM_ScanOpenMP(benchmark::State& state) {
  const auto corpus = enumerate_fixed(static_cast<unsigned>(state.range(0)));
  ScanOptions options;
  options.jobs = static_cast<unsigned>(omp_get_max_threads());
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(corpus, options));
}

}  // namespace

BENCHMARK(BM_RookSerial)->Arg(24)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RookOpenMP)->Arg(24)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_StandardMonomialsSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardMonomialsOpenMP)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanOpenMP)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
