#include <benchmark/benchmark.h>

#include "aspectral/aspectrum.hpp"
#include "aspectral/laws.hpp"
#include "aspectral/rng.hpp"
#include "aspectral/shiftlab.hpp"
#include "aspectral/weightspace.hpp"

using namespace aspectral;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_LawSuite(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.trials = 40;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg, law_ids(), exec_of(state)));
  state.SetLabel(std::string(to_string(exec_of(state))));
}
BENCHMARK(BM_LawSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiscReport(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(disc_report(ShiftKind::bilateral_factorial, 0.25, {20, 40, 60}, exec_of(state)));
  state.SetLabel(std::string(to_string(exec_of(state))));
}
BENCHMARK(BM_DiscReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ASpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PositiveWeight w = random_weight(1, n, n / 2 + 1, 10.0);
  Rng rng(2);
  const ComplexMatrix t = random_member(rng, w, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(a_spectrum(w, t));
}
BENCHMARK(BM_ASpectrum)->Arg(8)->Arg(32)->Arg(128);

void BM_PureStateSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PositiveWeight w = random_weight(1, n, n / 2 + 1, 10.0);
  Rng rng(3);
  const ComplexMatrix t = random_member(rng, w, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pure_state_spectrum(w, t));
}
BENCHMARK(BM_PureStateSpectrum)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
