#include <benchmark/benchmark.h>

#include "vnet/discrepancy.hpp"
#include "vnet/quality.hpp"
#include "vnet/search.hpp"

using namespace vnet;

namespace {

AlphaVector sample_alpha(const FieldTower& t, std::size_t s) {
  AlphaVector a;
  for (std::size_t i = 0; i < s; ++i) a.alphas.push_back(t.decode((3 * i + 2) % t.order()));
  return a;
}

void BM_TValue(benchmark::State& state) {
  const FieldTower t = FieldTower::standard(2, static_cast<unsigned>(state.range(0)));
  const auto mats = vandermonde_matrices(t, sample_alpha(t, 4));
  for (auto _ : state) benchmark::DoNotOptimize(t_value(mats).t);
}
BENCHMARK(BM_TValue)->Arg(4)->Arg(6)->Arg(8);

void BM_Rq(benchmark::State& state) {
  const FieldTower t = FieldTower::standard(2, static_cast<unsigned>(state.range(0)));
  const AlphaVector a = sample_alpha(t, 3);
  for (auto _ : state) benchmark::DoNotOptimize(r_q(t, a).value);
}
BENCHMARK(BM_Rq)->Arg(4)->Arg(6)->Arg(8);

void BM_CbcSearch(benchmark::State& state) {
  const FieldTower t = FieldTower::standard(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cbc_search(t, 5).alpha.size());
}
BENCHMARK(BM_CbcSearch)->Arg(4)->Arg(6);

void BM_StarDiscrepancy(benchmark::State& state) {
  const FieldTower t = FieldTower::standard(2, static_cast<unsigned>(state.range(0)));
  const NetPointSet pts = generate_points(vandermonde_matrices(t, sample_alpha(t, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy_exact(pts));
}
BENCHMARK(BM_StarDiscrepancy)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
