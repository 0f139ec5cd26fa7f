#include <benchmark/benchmark.h>

#include <wpl/bundle_quiver.hpp>
#include <wpl/moduli.hpp>
#include <wpl/picard.hpp>

namespace {

void BM_RefinementBasis(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::refinement_basis(w));
  }
}
BENCHMARK(BM_RefinementBasis);

void BM_IsStable234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  const wpl::StabilityParam theta = wpl::default_vartheta(w);
  const wpl::RefinedRep rep =
      wpl::rep_from_point(w, q, {wpl::Rat(46), wpl::Rat(13), wpl::Rat(3)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::is_stable(w, q, rep, theta));
  }
}
BENCHMARK(BM_IsStable234);

void BM_IsStableZeroRep(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  const wpl::StabilityParam theta = wpl::default_vartheta(w);
  const wpl::RefinedRep rep = wpl::zero_rep(w, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::is_stable(w, q, rep, theta));
  }
}
BENCHMARK(BM_IsStableZeroRep);

void BM_IsIsomorphic234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::LabeledQuiver q = wpl::canonical_quiver(w);
  const wpl::RefinedRep a =
      wpl::rep_from_point(w, q, {wpl::Rat(46), wpl::Rat(13), wpl::Rat(3)});
  const wpl::RefinedRep b = wpl::rep_from_point(
      w, q, {wpl::Rat(46) * 64, wpl::Rat(13) * 16, wpl::Rat(3) * 8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::is_isomorphic(w, q, a, b));
  }
}
BENCHMARK(BM_IsIsomorphic234);

void BM_FramedIso234(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::BundleQuiverExtraction ex = wpl::extract_bundle_quiver(w, 24);
  const wpl::FramedRep a = wpl::build_framed(
      w, ex.quiver, {wpl::Rat(0), wpl::Rat(1), wpl::Rat(1), wpl::Rat(5)});
  const wpl::FramedRep b = wpl::build_framed(
      w, ex.quiver, {wpl::Rat(0), wpl::Rat(16), wpl::Rat(8), wpl::Rat(5, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::is_isomorphic_framed(w, ex.quiver, a, b));
  }
}
BENCHMARK(BM_FramedIso234);

}  // namespace
