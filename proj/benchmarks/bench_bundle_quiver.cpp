#include <benchmark/benchmark.h>

#include <wpl/bundle_quiver.hpp>
#include <wpl/picard.hpp>

namespace {

void BM_ExtractQuiver234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::extract_bundle_quiver(w, 24));
  }
}
BENCHMARK(BM_ExtractQuiver234);

void BM_ExtractQuiver333(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({3, 3, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::extract_bundle_quiver(w, 6));
  }
}
BENCHMARK(BM_ExtractQuiver333);

void BM_CheckGeneration234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::BundleQuiverExtraction ex = wpl::extract_bundle_quiver(w, 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::check_generation(w, ex, 24));
  }
}
BENCHMARK(BM_CheckGeneration234);

void BM_ExtractRelations333(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({3, 3, 3});
  const wpl::BundleQuiverExtraction ex = wpl::extract_bundle_quiver(w, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::extract_relations(w, ex));
  }
}
BENCHMARK(BM_ExtractRelations333);

void BM_VerifyEndAlgebra234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::verify_end_algebra(w));
  }
}
BENCHMARK(BM_VerifyEndAlgebra234);

}  // namespace
