#include <benchmark/benchmark.h>

#include "zg/algebra.hpp"
#include "zg/catalog.hpp"
#include "zg/padic.hpp"
#include "zg/parallel.hpp"
#include "zg/sublattice_enum.hpp"

using namespace zg;

namespace {

void count_heisenberg(benchmark::State& state, CountStrategy strategy) {
  const auto H = rings::heisenberg();
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count(H, n, ClosureKind::subring, strategy));
}

void count_heisenberg_times_z(benchmark::State& state, CountStrategy strategy) {
  const auto L = direct_product(rings::heisenberg(), rings::abelian(1));
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count(L, n, ClosureKind::subring, strategy));
}

void local_h2(benchmark::State& state, CountStrategy strategy) {
  const auto H2 = rings::power(rings::heisenberg(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(local_coefficients(H2, 3, 2, ClosureKind::subring, strategy));
}

void chi4_cone_integral(benchmark::State& state) {
  set_worker_limit(static_cast<int>(state.range(0)));
  const auto D = chi4_cone_integral_data();
  for (auto _ : state) benchmark::DoNotOptimize(truncated_integral(D, 13, 2, 7));
  set_worker_limit(0);
}

}  // namespace

BENCHMARK_CAPTURE(count_heisenberg, reference, CountStrategy::reference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_heisenberg, pruned, CountStrategy::pruned)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_heisenberg, central, CountStrategy::central)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_heisenberg_times_z, reference, CountStrategy::reference)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(count_heisenberg_times_z, pruned, CountStrategy::pruned)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(local_h2, reference, CountStrategy::reference)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(local_h2, pruned, CountStrategy::pruned)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(local_h2, central, CountStrategy::central)->Unit(benchmark::kMillisecond);
BENCHMARK(chi4_cone_integral)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
