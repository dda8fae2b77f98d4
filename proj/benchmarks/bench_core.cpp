#include <benchmark/benchmark.h>

#include <crepant/cones.hpp>
#include <crepant/ehrhart.hpp>
#include <crepant/triangulation.hpp>

using namespace crepant;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

void BM_Resolve3(benchmark::State& state) {
  auto m = ParamSequence::make(3, {iv({2, 0, 0}), iv({2, 1, 0})});
  for (auto _ : state) {
    auto cert = resolve(m);
    benchmark::DoNotOptimize(cert.tri.simplices.size());
  }
}
BENCHMARK(BM_Resolve3);

void BM_Resolve4(benchmark::State& state) {
  auto m = ParamSequence::make(
      4, {iv({1, 0, 0, 0}), iv({1, 0, 0, 0}), iv({2, -1, -1, 0})});
  for (auto _ : state) {
    auto cert = resolve(m);
    benchmark::DoNotOptimize(cert.tri.simplices.size());
  }
}
BENCHMARK(BM_Resolve4);

void BM_HilbertDualBox(benchmark::State& state) {
  std::vector<Int> ks;
  for (long i = 0; i < state.range(0); ++i) ks.push_back(Int(3));
  auto cone = cone_over(rp_polytope(ks));
  for (auto _ : state) {
    auto hb = hilbert_basis(dual_cone(cone));
    benchmark::DoNotOptimize(hb.size());
  }
}
BENCHMARK(BM_HilbertDualBox)->Arg(2)->Arg(3)->Arg(4);

void BM_EhrhartInterp(benchmark::State& state) {
  auto p = hypersurface_simplex(4, 3);
  for (auto _ : state) {
    auto e = ehrhart_polynomial(p);
    benchmark::DoNotOptimize(e.delta.size());
  }
}
BENCHMARK(BM_EhrhartInterp);

void BM_LatticePoints(benchmark::State& state) {
  auto p = rp_polytope({Int(3), Int(3), Int(3)});
  for (auto _ : state) {
    auto pts = p.dilate(Int(state.range(0))).lattice_points();
    benchmark::DoNotOptimize(pts.size());
  }
}
BENCHMARK(BM_LatticePoints)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
