#include <benchmark/benchmark.h>

#include <frobtor/connection.hpp>
#include <frobtor/lauricella.hpp>
#include <frobtor/potential.hpp>
#include <frobtor/sampling.hpp>
#include <frobtor/suite.hpp>

using namespace frobtor;

namespace {

struct E8Fixture {
  RootDatum datum = build_root_system(Family::E, 8);
  FiberAlgebra alg = make_fiber_algebra(datum, Multiplicity{{0.7, 0.0}, {0.3, 0.0}});
  BasePoint pt;
  TangentVec x, y;

  E8Fixture() {
    Sampler sampler(42);
    pt = sampler.point(8);
    x = sampler.tangent(8);
    y = sampler.tangent(8);
  }
};

E8Fixture& e8() {
  static E8Fixture f;
  return f;
}

void product_e8(benchmark::State& state) {
  auto& f = e8();
  for (auto _ : state) benchmark::DoNotOptimize(product(f.alg, f.pt, f.x, f.y));
}
BENCHMARK(product_e8);

void mult_operator_e8(benchmark::State& state) {
  auto& f = e8();
  for (auto _ : state) benchmark::DoNotOptimize(mult_operator(f.alg, f.pt, f.x));
}
BENCHMARK(mult_operator_e8);

void curvature_pair_e8(benchmark::State& state) {
  auto& f = e8();
  for (auto _ : state) {
    const CurvaturePieces p = curvature_pieces(f.alg, f.pt, f.x, f.y);
    benchmark::DoNotOptimize(p.scale);
  }
}
BENCHMARK(curvature_pair_e8);

void trilog_series(benchmark::State& state) {
  const cplx z{0.81, 0.33};  // |z| close to the series boundary
  for (auto _ : state) benchmark::DoNotOptimize(li3(z));
}
BENCHMARK(trilog_series);

void frame_tensor_e8(benchmark::State& state) {
  auto& f = e8();
  const PotentialContext ctx = make_potential_context(f.alg);
  for (auto _ : state) benchmark::DoNotOptimize(frame_tensor(ctx, f.pt));
}
BENCHMARK(frame_tensor_e8);

void suite_d4(benchmark::State& state) {
  RunConfig cfg;
  cfg.family = Family::D;
  cfg.rank = 4;
  cfg.k = cplx{0.7, 0.0};
  cfg.points = 2;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg).checks.size());
}
BENCHMARK(suite_d4);

void weighted_symmetry(benchmark::State& state) {
  std::vector<Rat> weights;
  for (int i = 1; i <= 6; ++i) weights.emplace_back(i, 1 + (i % 3));
  const WeightedSystem sys = make_weighted_system(weights);
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_test(sys).symmetric);
}
BENCHMARK(weighted_symmetry);

}  // namespace

BENCHMARK_MAIN();
