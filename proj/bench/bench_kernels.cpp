// Serial reference vs OpenMP path for each parallel kernel.
// Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fovclass/classify.hpp"
#include "fovclass/metrics.hpp"
#include "fovclass/specio.hpp"

using namespace fovclass;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

DisplaySpec bundled(const std::string& name) {
  return load_display_spec(std::string(FOVCLASS_SPEC_DIR) + "/" + name + ".spec.json");
}

const AcuityModel kAdf = make_adf(AdfKind::ConstantFoveaSize, {20, 20});

void BM_Trapezoid(benchmark::State& state) {
  const auto nodes = quadrature_nodes(0.0, 80.0, std::vector<Degrees>{2.0}, 0.0005);
  const Curve f = [](Degrees e) { return kAdf(e); };
  for (auto _ : state) benchmark::DoNotOptimize(trapezoid(f, nodes, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nodes.size()));
}
BENCHMARK(BM_Trapezoid)->Arg(0)->Arg(1);

void BM_GazeInvariance(benchmark::State& state) {
  const auto spec = bundled("kim2019");
  const ClassifierConfig cfg;
  const auto gazes = uniform_grid(0.0, cfg.full_gaze_range, cfg.gaze_scan_step);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaze_invariance_flags(spec, kAdf, cfg, gazes, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gazes.size()));
}
BENCHMARK(BM_GazeInvariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BlendScan(benchmark::State& state) {
  const Tier hi{30.0, 16.0}, lo{7.2, 50.0};
  for (auto _ : state) benchmark::DoNotOptimize(blend_width_scores(hi, lo, kAdf, exec_of(state)));
}
BENCHMARK(BM_BlendScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyBatch(benchmark::State& state) {
  std::vector<DisplaySpec> specs;
  for (const char* n : {"vive", "vive_pro", "hololens", "varjo_vr1", "kim2019", "brute_force"}) {
    specs.push_back(bundled(n));
  }
  const ClassifierConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_batch(specs, {20, 20}, cfg, {}, exec_of(state)));
  }
}
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
