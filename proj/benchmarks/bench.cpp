#include <benchmark/benchmark.h>

#include "eurcs/bounds.hpp"
#include "eurcs/counting.hpp"
#include "eurcs/oracle.hpp"
#include "eurcs/pencil.hpp"
#include "eurcs/perms.hpp"

namespace {

using namespace eurcs;

void BM_EulerianPencil(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_pencil(n));
}
BENCHMARK(BM_EulerianPencil)->Arg(8)->Arg(16)->Arg(32);

void BM_PsdAtOrigin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QMatrix m0 = eulerian_pencil(n).constant;
  for (auto _ : state) benchmark::DoNotOptimize(psd(m0));
}
BENCHMARK(BM_PsdAtOrigin)->Arg(8)->Arg(16)->Arg(32);

void BM_DiagonalDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DiagonalPencil d = diagonal(eulerian_pencil(n));
  for (auto _ : state) benchmark::DoNotOptimize(det_diagonal_poly(d));
}
BENCHMARK(BM_DiagonalDeterminant)->Arg(4)->Arg(6)->Arg(8);

void BM_ExtremeRoot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_root(n, pow2(-64)));
}
BENCHMARK(BM_ExtremeRoot)->Arg(8)->Arg(16)->Arg(24);

void BM_RCountClosedForm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(r_count(40, {7, 21, 38}, RCountStrategy::ClosedForm));
}
BENCHMARK(BM_RCountClosedForm);

void BM_RCountAlpha(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(r_count(40, {7, 21, 38}, RCountStrategy::InclusionExclusionAlpha));
}
BENCHMARK(BM_RCountAlpha);

void BM_BruteForceEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_bruteforce(n));
}
BENCHMARK(BM_BruteForceEnumeration)->Arg(6)->Arg(7);

void BM_MultVBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mult_v_bound(n));
}
BENCHMARK(BM_MultVBound)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
