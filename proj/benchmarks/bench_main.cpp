#include <benchmark/benchmark.h>

#include "fracwave/bessel.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/oscillatory.hpp"
#include "fracwave/subordination.hpp"
#include "fracwave/testdata.hpp"

using namespace fracwave;

static void SymbolContour(benchmark::State& state) {
    FractionalOrder sigma(0.6);
    const double lambda = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto v = osc::symbol_I(sigma, lambda, 1.0);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(SymbolContour)->Arg(1)->Arg(100)->Arg(10000);

static void BesselJ(benchmark::State& state) {
    BesselOrder nu(0.6);
    const double r = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j(nu, r));
    }
}
BENCHMARK(BesselJ)->Arg(5)->Arg(100)->Arg(5000);

static void SpectralSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TorusGrid grid(2, n, 12.0);
    TestData data = default_band_passed_bump(grid);
    FractionalOrder sigma(0.4);
    for (auto _ : state) {
        auto u = solve_bessel(data.field, std::nullopt, sigma, 0.7);
        benchmark::DoNotOptimize(u.field.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SpectralSolve)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void SubordinationSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TorusGrid grid(1, n, 16.0);
    TestData data = default_band_passed_bump(grid);
    FractionalOrder sigma(0.4);
    for (auto _ : state) {
        auto u = apply_U(data.field, sigma, 0.7);
        benchmark::DoNotOptimize(u.field.values.data());
    }
}
BENCHMARK(SubordinationSolve)->RangeMultiplier(2)->Range(32, 128);

static void KernelPointQuery(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    GaussianSum::Bump b;
    b.width = 0.6;
    GaussianSum g(dim, {b});
    const double sigmas[4] = {0.0, 0.3, 0.6, 0.75};  // keep gamma in (0,1)
    auto spec = kernels::KernelSpec::make(dim, FractionalOrder(sigmas[dim]));
    kernels::PointQuery q;
    q.x = {0.2, -0.1, 0.1};
    q.t = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::kernel_low_solve(g, q, spec));
    }
}
BENCHMARK(KernelPointQuery)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
