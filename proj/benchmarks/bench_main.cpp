#include <benchmark/benchmark.h>

#include "omega/birkhoff.hpp"
#include "omega/entropy.hpp"
#include "omega/horseshoe.hpp"
#include "omega/limit_sets.hpp"
#include "omega/shadowing.hpp"
#include "omega/synthesis.hpp"

using namespace omega;

namespace {

BlockSchedule segment_schedule() {
  SynthesisConfig cfg;
  cfg.lambda = SftDescr::full(2);
  cfg.target.vertices = {MixedMeasure::of(PeriodicMeasure{2, {0}}),
                         MixedMeasure::of(MarkovMeasure::bernoulli({0.5, 0.5}))};
  return build_saturated_schedule(cfg);
}

void schedule_prefix_1m(benchmark::State& st) {
  auto s = segment_schedule();
  for (auto _ : st) benchmark::DoNotOptimize(schedule_prefix(s, 1 << 20));
  st.SetItemsProcessed(st.iterations() * (1 << 20));
}
BENCHMARK(schedule_prefix_1m)->Unit(benchmark::kMillisecond);

void realize_and_classify(benchmark::State& st) {
  auto L = all_case_labels()[st.range(0)];
  for (auto _ : st) {
    auto w = realize_case(L);
    benchmark::DoNotOptimize(classify_case(w.schedule));
  }
}
BENCHMARK(realize_and_classify)->DenseRange(0, 11)->Unit(benchmark::kMillisecond);

void katok_24(benchmark::State& st) {
  auto mu = MarkovMeasure::bernoulli({0.9, 0.1});
  for (auto _ : st) benchmark::DoNotOptimize(katok_entropy_estimate(mu, 0.5, 24));
}
BENCHMARK(katok_24);

void horseshoe_build(benchmark::State& st) {
  auto mu = MarkovMeasure::bernoulli({0.3, 0.7});
  for (auto _ : st) benchmark::DoNotOptimize(build_horseshoe(mu, 0.05, 0.1));
}
BENCHMARK(horseshoe_build)->Unit(benchmark::kMillisecond);

void level_entropy_quarter(benchmark::State& st) {
  auto phi = Observable::indicator(2, {1});
  for (auto _ : st) benchmark::DoNotOptimize(level_entropy(phi, 0.25));
}
BENCHMARK(level_entropy_quarter)->Unit(benchmark::kMillisecond);

void doubling_shadow(benchmark::State& st) {
  RealPseudoOrbit p;
  p.delta = Rational(1, 256);
  Rational x(1, 7);
  for (int n = 0; n < st.range(0); ++n) {
    p.x.push_back(x);
    x = frac(2 * x + Rational(n % 3 - 1, 1024));
  }
  for (auto _ : st) benchmark::DoNotOptimize(shadow_doubling(p, Rational(1, 32)));
}
BENCHMARK(doubling_shadow)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
