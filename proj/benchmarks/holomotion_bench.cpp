#include <benchmark/benchmark.h>

#include "holomotion/construction.hpp"
#include "holomotion/contour.hpp"
#include "holomotion/homotopy.hpp"
#include "holomotion/motion.hpp"
#include "holomotion/report.hpp"

using namespace holomotion;

namespace {

void BM_WindingOfImageCurve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConstructionParams p = select_parameters(n);
  const ClosedCurve image = map_curve(p.g, circle_curve(0.0, 1.0, 1024));
  for (auto _ : state) {
    benchmark::DoNotOptimize(winding_number(image, p.z0));
  }
}
BENCHMARK(BM_WindingOfImageCurve)->Arg(2)->Arg(3)->Arg(4);

void BM_ArgumentCount(benchmark::State& state) {
  const ConstructionParams p = select_parameters(2);
  const ClosedCurve boundary = circle_curve(0.0, p.r, static_cast<int>(state.range(0)));
  const ShiftedRational h = p.h();
  for (auto _ : state) {
    benchmark::DoNotOptimize(argument_count(h, boundary));
  }
}
BENCHMARK(BM_ArgumentCount)->Arg(1024)->Arg(4096);

void BM_SelectParameters(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_parameters(n));
  }
}
BENCHMARK(BM_SelectParameters)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TraceWord(benchmark::State& state) {
  const ConstructionParams p = select_parameters(static_cast<int>(state.range(0)));
  const PuncturedPlane plane = PuncturedPlane::with_default_rays(0.0, p.z0);
  const ClosedCurve image = map_curve(p.g, circle_curve(0.0, 1.0, 1024));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_word(plane, image));
  }
}
BENCHMARK(BM_TraceWord)->Arg(2)->Arg(4);

void BM_ZeroWindingVerdict(benchmark::State& state) {
  const MotionSpec spec = make_motion(select_parameters(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zero_winding_verdict(spec));
  }
}
BENCHMARK(BM_ZeroWindingVerdict)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RunConstruct(benchmark::State& state) {
  RunConfig config;
  config.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_construct(config));
  }
}
BENCHMARK(BM_RunConstruct)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
