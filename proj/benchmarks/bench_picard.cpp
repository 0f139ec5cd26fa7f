#include <benchmark/benchmark.h>

#include <wpl/coxring.hpp>
#include <wpl/picard.hpp>

#include <cstdint>
#include <vector>

namespace {

void BM_NormalForm(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::Int ell("123456789123456789");
  const std::vector<wpl::Int> arm = {wpl::Int("-987654321987"), wpl::Int(500),
                                     wpl::Int("-31")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.normal_form(ell, arm));
  }
}
BENCHMARK(BM_NormalForm);

void BM_GroupOps(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({5, 6, 4});
  const wpl::PicElt omega = w.dualizing();
  for (auto _ : state) {
    wpl::PicElt acc = w.zero();
    for (int i = 0; i < 64; ++i) {
      acc = w.add(acc, omega);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_GroupOps);

void BM_SectionDim(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const wpl::PicElt d = w.scale(wpl::Int(state.range(0)), w.unit());
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::section_dim(w, d));
  }
}
BENCHMARK(BM_SectionDim)->Arg(1)->Arg(16)->Arg(256);

void BM_SectionBasis(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({3, 3, 3});
  const wpl::PicElt d = w.scale(wpl::Int(state.range(0)), w.unit());
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::section_basis(w, d));
  }
}
BENCHMARK(BM_SectionBasis)->Arg(2)->Arg(8);

void BM_RelationLattice(benchmark::State& state) {
  const wpl::WplData w = wpl::make_wpl({2, 3, 4});
  const std::vector<wpl::PicElt> degrees = {w.x(2), w.x(3), w.dualizing()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpl::relation_lattice(w, degrees));
  }
}
BENCHMARK(BM_RelationLattice);

}  // namespace

BENCHMARK_MAIN();
