#include <benchmark/benchmark.h>

#include "frobalg/families.hpp"
#include "frobalg/pipeline.hpp"
#include "frobalg/verification.hpp"

namespace {

using namespace frobalg;

const FieldSpec Q = FieldSpec::rationals();

FinDimAlgebra nsy_uniform(std::size_t n, std::size_t l, std::size_t m) {
  return nsy_algebra(n, l, std::vector<std::size_t>(n, m), Q).algebra;
}

void BM_Radical(benchmark::State& state) {
  const auto a = nsy_uniform(3, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radical(a));
  state.counters["dim"] = static_cast<double>(a.dim());
}
BENCHMARK(BM_Radical)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RadicalSmallPrime(benchmark::State& state) {
  const auto a = group_algebra({3, 3}, FieldSpec::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(radical(a));
}
BENCHMARK(BM_RadicalSmallPrime)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto a = nsy_uniform(3, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a, kDefaultSeed));
  state.counters["dim"] = static_cast<double>(a.dim());
}
BENCHMARK(BM_Analyze)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Prepare(benchmark::State& state) {
  const auto a = nsy_uniform(3, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prepare(a, kDefaultSeed));
}
BENCHMARK(BM_Prepare)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SpreadAndCheck(benchmark::State& state) {
  const auto p = prepare(nsy_uniform(3, 3, static_cast<std::size_t>(state.range(0))), kDefaultSeed);
  const auto spec = SpreadSpec::full(p.amp.m, p.lambda_nak);
  for (auto _ : state) benchmark::DoNotOptimize(comultiply(p, spec));
  state.counters["dim"] = static_cast<double>(p.amp.algebra.dim());
}
BENCHMARK(BM_SpreadAndCheck)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Coassociativity(benchmark::State& state) {
  const auto p = prepare(nsy_uniform(3, 3, static_cast<std::size_t>(state.range(0))), kDefaultSeed);
  const auto r = comultiply(p, SpreadSpec::singleton(p.amp.n()));
  for (auto _ : state) benchmark::DoNotOptimize(check_coassociativity(p.analysis.algebra, r.report.x));
}
BENCHMARK(BM_Coassociativity)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AcceptanceSmall(benchmark::State& state) {
  VerifyOptions opt;
  opt.profile = "small";
  for (auto _ : state) benchmark::DoNotOptimize(run_acceptance(opt));
}
BENCHMARK(BM_AcceptanceSmall)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
