#include <benchmark/benchmark.h>

#include <marf/fuchsian.hpp>
#include <marf/mcg.hpp>
#include <marf/moduli.hpp>

#include <numbers>

using namespace marf;

static void BM_EnumerateAll(benchmark::State& state) {
  const Signature sig{4, {}};
  for (auto _ : state) {
    std::uint64_t n = 0;
    for (const auto& f : enumerate_all(sig, 3)) n += static_cast<std::uint64_t>(f.alpha[0]);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateAll);

static void BM_ClassifyOrbits(benchmark::State& state) {
  const Signature sig{static_cast<int>(state.range(0)), {}};
  for (auto _ : state) benchmark::DoNotOptimize(classify_orbits(sig, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ClassifyOrbits)->Args({2, 2})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  auto f = from_tuple(Signature{4, {}}, 3, {1, 2, 0, 1, 2, 2, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f));
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMillisecond);

static void BM_Components(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(components(Signature{1, {5}}, 4, true));
}
BENCHMARK(BM_Components);

static void BM_Level(benchmark::State& state) {
  const auto e = shift_level(canonical_lift(rotation_about({0.3, 1.7}, 2 * std::numbers::pi / 7)), 2);
  const auto h = canonical_lift(Moebius::make(2, 1, 1, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(level(e));
    benchmark::DoNotOptimize(level(h));
  }
}
BENCHMARK(BM_Level);

static void BM_LiftMultiply(benchmark::State& state) {
  const auto a = canonical_lift(Moebius::make(2, 1, 1, 1));
  const auto b = canonical_lift(rotation_about({-0.4, 0.9}, 1.1));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LiftMultiply);

static void BM_MakeSignature(benchmark::State& state) {
  const std::vector<Signature> sigs = {{0, {5, 5, 5}}, {0, {3, 3, 3, 3}}, {1, {5}}, {2, {}}, {2, {5, 5}}};
  const auto& sig = sigs[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(sig.to_string());
  for (auto _ : state) benchmark::DoNotOptimize(make_signature(sig));
}
BENCHMARK(BM_MakeSignature)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_VerifyAxioms(benchmark::State& state) {
  const auto lift = lift_with_levels(make_signature(Signature{1, {5}}), 4, {0}, {0});
  for (auto _ : state) benchmark::DoNotOptimize(verify_arf_axioms(lift, 100, 0));
}
BENCHMARK(BM_VerifyAxioms)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
