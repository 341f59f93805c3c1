#include <benchmark/benchmark.h>

#include "pseudogas/lattice.hpp"
#include "pseudogas/polylog.hpp"
#include "pseudogas/statmech.hpp"

namespace pg = pseudogas;

namespace {

constexpr double kMass = 6.6465e-27;

pg::ModeLattice lattice(double spacing, int n_max) {
    return pg::build_lattice(pg::box_length_for_spacing(spacing, kMass, 1.0), kMass, 1.0, n_max);
}

void BM_Polylog(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(pg::polylog(1.5, z));
}
BENCHMARK(BM_Polylog)->Arg(1)->Arg(50)->Arg(90)->Arg(99);

void BM_OccupancyQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pg::occupancy_ratio_quadrature(0.5, pg::Statistics::Fermi));
    }
}
BENCHMARK(BM_OccupancyQuadrature);

void BM_SolveFugacity(benchmark::State& state) {
    const auto stats = state.range(0) == 0 ? pg::Statistics::Bose : pg::Statistics::Fermi;
    for (auto _ : state) benchmark::DoNotOptimize(pg::solve_fugacity(0.1, stats));
}
BENCHMARK(BM_SolveFugacity)->Arg(0)->Arg(1);

void BM_EnumerateExact(benchmark::State& state) {
    const pg::ModeLattice lat = lattice(0.3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pg::enumerate_exact(lat, 2, pg::Statistics::Bose, 1));
    }
}
BENCHMARK(BM_EnumerateExact)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalRecursion(benchmark::State& state) {
    const pg::ModeLattice lat = lattice(0.1, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pg::canonical_partition_recursion(lat, 8, pg::Statistics::Bose));
    }
}
BENCHMARK(BM_CanonicalRecursion)->Unit(benchmark::kMillisecond);

void BM_Sampler(benchmark::State& state) {
    const pg::ModeLattice lat = lattice(0.1, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pg::sample_boltzmann_coincidences(lat, 8, 10000, 1, 1));
    }
}
BENCHMARK(BM_Sampler)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
