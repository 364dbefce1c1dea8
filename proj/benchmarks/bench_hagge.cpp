#include <benchmark/benchmark.h>

#include "hagge/construction.hpp"
#include "hagge/similarity.hpp"
#include "hagge/verify.hpp"

namespace {

void BM_ClosedFormExact(benchmark::State& state) {
  const auto scene = hagge::random_scene(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::construct(scene, hagge::ConstructionPath::closed_form));
  }
}
BENCHMARK(BM_ClosedFormExact);

void BM_GeometricExact(benchmark::State& state) {
  const auto scene = hagge::random_scene(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::construct(scene, hagge::ConstructionPath::geometric));
  }
}
BENCHMARK(BM_GeometricExact);

void BM_GeometricDouble(benchmark::State& state) {
  const auto scene = hagge::random_double_scene(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::construct(scene, hagge::ConstructionPath::geometric));
  }
}
BENCHMARK(BM_GeometricDouble);

void BM_CanonicalFrameDouble(benchmark::State& state) {
  const auto scene = hagge::random_double_scene(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::construct_in_canonical_frame(scene));
  }
}
BENCHMARK(BM_CanonicalFrameDouble);

void BM_VerifyScene(benchmark::State& state) {
  const auto scene = hagge::random_scene(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::verify_scene(scene));
  }
}
BENCHMARK(BM_VerifyScene);

void BM_VerifyBatchSingleThread(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hagge::verify_batch(static_cast<std::uint64_t>(state.range(0)), 42, {}, {}, 1));
  }
}
BENCHMARK(BM_VerifyBatchSingleThread)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
