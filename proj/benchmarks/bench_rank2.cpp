#include "benchmark/benchmark.h"
#include "rank2/rank2.hpp"

namespace {

using rank2::Algebra;
using rank2::Irrep;

void BM_multiplicities_sp2(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::multiplicities({Algebra::sp2, n, n}));
  }
}
BENCHMARK(BM_multiplicities_sp2)->Arg(3)->Arg(6)->Arg(9);

void BM_multiplicities_g2(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::multiplicities({Algebra::g2, n, n}));
  }
}
BENCHMARK(BM_multiplicities_g2)->Arg(2)->Arg(4);

void BM_tensor_sp2(benchmark::State& state) {
  const long long n = state.range(0);
  const Irrep r1{Algebra::sp2, n, n}, r2{Algebra::sp2, 2, 0};
  rank2::tensor_decompose(r1, r2);  // warm the diagram cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::tensor_decompose(r1, r2));
  }
}
BENCHMARK(BM_tensor_sp2)->Arg(5)->Arg(9);

void BM_tensor_girdle_sp2(benchmark::State& state) {
  const long long n = state.range(0);
  const Irrep r1{Algebra::sp2, n, n}, r2{Algebra::sp2, 2, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::tensor_by_girdles(r1, r2));
  }
}
BENCHMARK(BM_tensor_girdle_sp2)->Arg(5)->Arg(9);

void BM_chi_su3(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::chi({Algebra::su3, n, n}));
  }
}
BENCHMARK(BM_chi_su3)->Arg(4)->Arg(9);

void BM_scan_sp2(benchmark::State& state) {
  const long long max_dim = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2::scan_degeneracies(Algebra::sp2, max_dim, 2));
  }
}
BENCHMARK(BM_scan_sp2)->Arg(1000)->Arg(10000);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
