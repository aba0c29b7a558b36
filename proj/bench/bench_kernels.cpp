// Serial reference kernels against the OpenMP versions, and the full-space
// engine against the two-level engine. Run with OMP_NUM_THREADS to vary the
// thread count.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "adj/evolution.hpp"
#include "adj/kernels.hpp"

namespace {

using adj::cplx;

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

template <cplx (*Inner)(std::span<const cplx>, std::span<const cplx>)>
void BM_inner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(n, 1);
  const auto b = random_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Inner(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <void (*Update)(std::span<cplx>, cplx, cplx, std::span<const cplx>, cplx,
                         std::span<const cplx>)>
void BM_rank2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto x = random_vector(n, 3);
  const auto u = random_vector(n, 4);
  const auto v = random_vector(n, 5);
  // unit-modulus scale keeps x bounded over many iterations
  const cplx scale = std::polar(1.0, 0.01);
  for (auto _ : state) {
    Update(x, scale, {1e-3, 0.0}, u, {0.0, -1e-3}, v);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_engine(benchmark::State& state, adj::Engine engine) {
  const int n = static_cast<int>(state.range(0));
  const auto h = adj::modified_interpolation(adj::BooleanOracle::balanced(n, 11));
  const auto sched = adj::Schedule::linear(40.0);
  const auto steps = adj::default_steps(40.0);
  for (auto _ : state) benchmark::DoNotOptimize(adj::evolve(engine, h, sched, steps).fidelity);
}

}  // namespace

BENCHMARK(BM_inner<adj::kernels::serial::inner>)->Name("inner/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_inner<adj::kernels::parallel::inner>)->Name("inner/parallel")->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_rank2<adj::kernels::serial::rank2_update>)->Name("rank2/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_rank2<adj::kernels::parallel::rank2_update>)->Name("rank2/parallel")->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_engine, full, adj::Engine::FullSpace)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_engine, effective, adj::Engine::Effective2D)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
