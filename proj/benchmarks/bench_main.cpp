#include <crossbraid/braiding.hpp>
#include <crossbraid/crossed.hpp>
#include <crossbraid/supergroup.hpp>

#include <benchmark/benchmark.h>

namespace cb = crossbraid;

namespace {

void BM_BuildSupergroup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cb::build_supergroup(n));
}
BENCHMARK(BM_BuildSupergroup)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BialgebraAxioms(benchmark::State& state) {
  const cb::HopfData h = cb::build_supergroup(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cb::verify_bialgebra_axioms(h));
  state.counters["dim"] = static_cast<double>(h.dim);
}
BENCHMARK(BM_BialgebraAxioms)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Pentagon(benchmark::State& state) {
  const cb::HopfData h = cb::build_supergroup(2);
  const cb::CrossedDatum d = cb::preset("D-u-iota-plus").datum;
  const auto objects = cb::make_testset(h, d, static_cast<cb::Testset>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cb::verify_pentagon(h, d, objects));
  state.counters["objects"] = static_cast<double>(objects.size());
}
BENCHMARK(BM_Pentagon)
    ->Arg(static_cast<int>(cb::Testset::minimal))
    ->Arg(static_cast<int>(cb::Testset::standard))
    ->Unit(benchmark::kMillisecond);

void BM_Hexagons(benchmark::State& state) {
  const cb::HopfData h = cb::build_supergroup(2);
  const cb::RForm r = cb::standard_r_form(2);
  const cb::CrossedDatum d = cb::preset("D-u-iota-plus").datum;
  const auto objects = cb::make_testset(h, d, cb::Testset::standard);
  const auto candidate = cb::trivial_candidate(h, d.group);
  for (auto _ : state) benchmark::DoNotOptimize(cb::verify_hexagons(h, r, d, candidate, objects));
}
BENCHMARK(BM_Hexagons)->Unit(benchmark::kMillisecond);

void BM_BraidabilityReport(benchmark::State& state) {
  cb::BraidabilityOptions opts;
  opts.exploratory = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(cb::braidability_report("D-u-iota-plus", opts));
}
BENCHMARK(BM_BraidabilityReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
