// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "entangle/batch.hpp"
#include "entangle/bell.hpp"
#include "entangle/reference.hpp"

using namespace entangle;

namespace {

ComplexMatrix random_operator(const BipartiteDims& dims) {
  return random_density(dims, dims.total(), 1).matrix();
}

BipartiteDims square(const benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  return BipartiteDims(d, d);
}

void BM_PartialTransposeSerial(benchmark::State& state) {
  const BipartiteDims dims = square(state);
  const ComplexMatrix m = random_operator(dims);
  for (auto _ : state) benchmark::DoNotOptimize(reference::partial_transpose(m, dims, Subsystem::A));
}

void BM_PartialTransposeParallel(benchmark::State& state) {
  const BipartiteDims dims = square(state);
  const ComplexMatrix m = random_operator(dims);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(m, dims, Subsystem::A));
}

void BM_PartialTraceSerial(benchmark::State& state) {
  const BipartiteDims dims = square(state);
  const ComplexMatrix m = random_operator(dims);
  for (auto _ : state) benchmark::DoNotOptimize(reference::partial_trace(m, dims, Subsystem::A));
}

void BM_PartialTraceParallel(benchmark::State& state) {
  const BipartiteDims dims = square(state);
  const ComplexMatrix m = random_operator(dims);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(m, dims, Subsystem::A));
}

std::vector<DensityMatrix> batch(int n) {
  std::vector<DensityMatrix> states;
  for (int i = 0; i < n; ++i) states.push_back(random_density(BipartiteDims(3, 3), 3, static_cast<std::uint64_t>(i)));
  return states;
}

void BM_ClassifyBatchSerial(benchmark::State& state) {
  const auto states = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::classify_batch(states));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyBatchParallel(benchmark::State& state) {
  const auto states = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(states));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MaximizeChshSerial(benchmark::State& state) {
  const DensityMatrix rho = random_density(BipartiteDims(2, 2), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_chsh_serial(rho));
}

void BM_MaximizeChshParallel(benchmark::State& state) {
  const DensityMatrix rho = random_density(BipartiteDims(2, 2), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_chsh(rho));
}

}  // namespace

BENCHMARK(BM_PartialTransposeSerial)->Arg(4)->Arg(16)->Arg(32);
BENCHMARK(BM_PartialTransposeParallel)->Arg(4)->Arg(16)->Arg(32);
BENCHMARK(BM_PartialTraceSerial)->Arg(4)->Arg(16)->Arg(32);
BENCHMARK(BM_PartialTraceParallel)->Arg(4)->Arg(16)->Arg(32);
BENCHMARK(BM_ClassifyBatchSerial)->Arg(256);
BENCHMARK(BM_ClassifyBatchParallel)->Arg(256);
BENCHMARK(BM_MaximizeChshSerial);
BENCHMARK(BM_MaximizeChshParallel);

BENCHMARK_MAIN();
