#include <benchmark/benchmark.h>

#include <random>

#include "alphacf/bmo_lab.hpp"
#include "alphacf/cf_core.hpp"
#include "alphacf/modular_series.hpp"
#include "alphacf/orbit_compare.hpp"
#include "alphacf/series_eval.hpp"

using namespace alphacf;

namespace {

const ExactNumber kSilver = make_quadratic(-1, 1, 1, 2);

void BM_ExpandSurd(benchmark::State& state) {
  const Alpha a(Rational(3, 5));
  const ExactNumber x = normalize(make_quadratic(-3, 1, 2, 19), a).x;
  for (auto _ : state) benchmark::DoNotOptimize(unrolled(expand(x, a, 200), state.range(0)));
}
BENCHMARK(BM_ExpandSurd)->Arg(50)->Arg(400);

void BM_ExpandFloat(benchmark::State& state) {
  const ExactNumber f = Float::enclose(kSilver.surd(), static_cast<Precision>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(f, Alpha::one(), 2000, OnAmbiguity::Truncate));
}
BENCHMARK(BM_ExpandFloat)->Arg(256)->Arg(1024);

void BM_ExpandRational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<ExactNumber> xs;
  for (int i = 0; i < 64; ++i) xs.emplace_back(Rational(static_cast<long>(rng() % 1000000) + 1, 2000003));
  for (auto _ : state) {
    for (const auto& x : xs) benchmark::DoNotOptimize(expand(x, Alpha::half(), 100));
  }
}
BENCHMARK(BM_ExpandRational);

void BM_WiltonPeriodic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wilton(kSilver, Alpha(Rational(3, 5))));
}
BENCHMARK(BM_WiltonPeriodic);

void BM_BrjunoFloat(benchmark::State& state) {
  const ExactNumber f = ExactNumber::parse("0.3183098861837906715377675267450287240689192914809128974953346881", 256);
  for (auto _ : state) benchmark::DoNotOptimize(brjuno_k(f, Alpha::one(), 2));
}
BENCHMARK(BM_BrjunoFloat);

void BM_FastSeries(benchmark::State& state) {
  const FastSeries w(1.0L, SeriesMode::wilton());
  long double y = 0.1234567L;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w(y));
    y += 1e-7L;
  }
}
BENCHMARK(BM_FastSeries);

void BM_MeanOscillation(benchmark::State& state) {
  const FastSeries w(1.0L, SeriesMode::wilton());
  QuadratureOptions o;
  o.n_samples = static_cast<std::size_t>(state.range(0));
  const RationalInterval I(Rational(-1, 64), Rational(1, 64));
  for (auto _ : state) benchmark::DoNotOptimize(mean_oscillation([&w](long double y) { return w(y); }, I, o));
}
BENCHMARK(BM_MeanOscillation)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_MatchedOrbits(benchmark::State& state) {
  const ExactNumber x = normalize(kSilver, Alpha::half()).x;
  for (auto _ : state) benchmark::DoNotOptimize(q_difference_classify(matched_orbits(x, Alpha(Rational(29, 50)), 40)));
}
BENCHMARK(BM_MatchedOrbits);

void BM_SigmaSieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SigmaTable(static_cast<std::size_t>(state.range(0)), 3));
}
BENCHMARK(BM_SigmaSieve)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_FourierFk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fourier_Fk_partial(golden_conjugate(), 4, 10000));
}
BENCHMARK(BM_FourierFk)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
