// Microbenchmarks for the hot paths: trace-tree enumeration, word-ball
// enumeration, pants assembly, Markov recursion, and the optimizer kernel.

#include <benchmark/benchmark.h>

#include <cmath>

#include "geowb/enumerate.hpp"
#include "geowb/extremal.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/markov.hpp"
#include "geowb/nelder_mead.hpp"
#include "geowb/pants.hpp"
#include "geowb/spectra.hpp"
#include "geowb/trace_tree.hpp"

namespace {

void bm_trace_tree(benchmark::State& state) {
  const geowb::HolonomyRep rep = geowb::modular_torus();
  const double cutoff = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const geowb::SimpleSpectrum spec = geowb::trace_tree(rep, cutoff);
    benchmark::DoNotOptimize(spec.entries.data());
    state.counters["classes"] = static_cast<double>(spec.entries.size());
  }
}
BENCHMARK(bm_trace_tree)->Arg(10)->Arg(15)->Arg(20);

void bm_enumerate_geodesics(benchmark::State& state) {
  const geowb::HolonomyRep rep =
      geowb::holonomy(geowb::torus_graph(), geowb::torus_fn(2.2, 0.4, 0.7));
  const double cutoff = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const geowb::GeodesicSpectrum spec = geowb::enumerate_geodesics(rep, cutoff);
    benchmark::DoNotOptimize(spec.classes.data());
    state.counters["classes"] = static_cast<double>(spec.classes.size());
  }
}
BENCHMARK(bm_enumerate_geodesics)->Arg(4)->Arg(6)->Arg(8);

void bm_build_pants(benchmark::State& state) {
  for (auto _ : state) {
    const geowb::PantsGeometry pants = geowb::build_pants(1.3, 2.1, 0.8);
    benchmark::DoNotOptimize(pants.relation_residual);
  }
}
BENCHMARK(bm_build_pants);

void bm_markov_tree(benchmark::State& state) {
  const mpz_class bound = 1000000;
  for (auto _ : state) {
    const auto triples = geowb::markov_tree(bound);
    benchmark::DoNotOptimize(triples.data());
    state.counters["triples"] = static_cast<double>(triples.size());
  }
}
BENCHMARK(bm_markov_tree);

void bm_systole_fast_path(benchmark::State& state) {
  const geowb::HolonomyRep rep =
      geowb::holonomy(geowb::torus_graph(), geowb::torus_fn(2.2, 0.4, 0.7));
  for (auto _ : state) {
    const double l = geowb::shortest_geodesic_length(rep, 3.0);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(bm_systole_fast_path);

void bm_nelder_mead(benchmark::State& state) {
  const auto bowl = [](const std::vector<double>& x) {
    return -(x[0] - 1.0) * (x[0] - 1.0) - (x[1] + 0.5) * (x[1] + 0.5);
  };
  for (auto _ : state) {
    const auto result = geowb::nelder_mead_maximize(
        bowl, geowb::axis_simplex({0.0, 0.0}, 0.5), 500, 1e-10, 1e-12);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(bm_nelder_mead);

void bm_torus_objective(benchmark::State& state) {
  for (auto _ : state) {
    const geowb::OptRun run = geowb::maximize_torus_systole(0.0, 1500);
    benchmark::DoNotOptimize(run.best_value);
  }
}
BENCHMARK(bm_torus_objective);

}  // namespace

BENCHMARK_MAIN();
