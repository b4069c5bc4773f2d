#include <benchmark/benchmark.h>

#include "heun/darboux.hpp"
#include "heun/quasi.hpp"
#include "heun/spectral.hpp"

using namespace heun;

namespace {

void BM_ComposeHamiltonians(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const DiffOp H = hamiltonian(ParamTuple(Quad{l, 1, 1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(compose(H, H));
}
BENCHMARK(BM_ComposeHamiltonians)->DenseRange(1, 4);

void BM_BuildL(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlphaTuple a(Quad{-2 * d, 0, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(build_L(a));
}
BENCHMARK(BM_BuildL)->DenseRange(1, 4);

void BM_BuildLWronskian(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto basis = basis_V(AlphaTuple(Quad{-2 * d, 0, 0, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(build_L_wronskian(basis));
}
BENCHMARK(BM_BuildLWronskian)->DenseRange(1, 4);

void BM_CharPoly(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const AlphaTuple a(Quad{-2 * d, 0, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->DenseRange(1, 6);

void BM_ComputeXi(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const ParamTuple t(Quad{l, 1, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(compute_xi(t));
}
BENCHMARK(BM_ComputeXi)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_OperatorA(benchmark::State& state) {
  const XiFunction xi = compute_xi(ParamTuple(Quad{static_cast<int>(state.range(0)), 0, 0, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(operator_A(xi));
}
BENCHMARK(BM_OperatorA)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
