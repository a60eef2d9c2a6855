#include <benchmark/benchmark.h>

#include <random>

#include "bsmap/entropy.hpp"

using namespace bsmap;

namespace {

const MarkedPolygon& regular2() {
  static const MarkedPolygon poly = regular_polygon(2);
  return poly;
}

const BoundaryMap& map2() {
  static const BoundaryMap bm(regular2());
  return bm;
}

}  // namespace

static void boundary_map_step(benchmark::State& state) {
  const BoundaryMap& bm = map2();
  BoundaryPoint x(0.7643);
  for (auto _ : state) {
    x = bm.step(x).image;
    benchmark::DoNotOptimize(x.angle);
  }
}
BENCHMARK(boundary_map_step);

static void orbit_log_derivative_block(benchmark::State& state) {
  const BoundaryMap& bm = map2();
  for (auto _ : state)
    benchmark::DoNotOptimize(bm.orbit_log_derivative_sum(BoundaryPoint(0.7643), 4096));
}
BENCHMARK(orbit_log_derivative_block);

static void exit_side_query(benchmark::State& state) {
  const BoundaryMap& bm = map2();
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  for (auto _ : state) {
    const GeodesicPair p{BoundaryPoint(unif(rng)), BoundaryPoint(unif(rng))};
    try {
      benchmark::DoNotOptimize(bm.exit_side(p));
    } catch (const AmbiguousExit&) {
    }
  }
}
BENCHMARK(exit_side_query);

static void markov_build(benchmark::State& state) {
  const BoundaryMap& bm = map2();
  for (auto _ : state) benchmark::DoNotOptimize(build_markov(bm).size);
}
BENCHMARK(markov_build);

static void perron_root(benchmark::State& state) {
  const MarkovData md = build_markov(map2());
  for (auto _ : state) benchmark::DoNotOptimize(perron_eigenvalue(md.matrix));
}
BENCHMARK(perron_root);

static void maskit_polygon_build(benchmark::State& state) {
  const FenchelNielsen6 p = regular_fn_parameters();
  for (auto _ : state) benchmark::DoNotOptimize(maskit_polygon(p).n);
}
BENCHMARK(maskit_polygon_build);

static void nu_mass_small(benchmark::State& state) {
  const MarkedPolygon& poly = regular2();
  for (auto _ : state)
    benchmark::DoNotOptimize(nu_mass_quadrature(poly, 100000, 0x5EED).value);
}
BENCHMARK(nu_mass_small)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
