#include <benchmark/benchmark.h>

#include "wlab/closed_form.hpp"
#include "wlab/identities.hpp"
#include "wlab/model_geometry.hpp"

using namespace wlab;

static void BM_DiskSpectra(benchmark::State& state) {
    for (auto _ : state) {
        SpectrumTriple t = disk_spectra(1.0, 1.0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(t.wentzel);
    }
}
BENCHMARK(BM_DiskSpectra)->Arg(100)->Arg(1000);

static void BM_AnnulusSpectra(benchmark::State& state) {
    for (auto _ : state) {
        SpectrumTriple t = annulus_spectra(1.0, 2.0, 1.0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(t.wentzel);
    }
}
BENCHMARK(BM_AnnulusSpectra)->Arg(20)->Arg(100);

static void BM_RiccatiClosedEval(benchmark::State& state) {
    const RiccatiSolution a(1.0, -1.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-7;
        benchmark::DoNotOptimize(a(t));
    }
}
BENCHMARK(BM_RiccatiClosedEval);

static void BM_PohResidual(benchmark::State& state) {
    const Field2D u = harmonic_disk_mode(5);
    for (auto _ : state) {
        IdentityResult r = poh_residual(1.0, u, 0.3, 1.0);
        benchmark::DoNotOptimize(r.residual);
    }
}
BENCHMARK(BM_PohResidual)->Unit(benchmark::kMillisecond);

static void BM_StarGeometry(benchmark::State& state) {
    for (auto _ : state) {
        GeometryBounds g = geometry_of(StarSpec{1.0, 0.1, 5});
        benchmark::DoNotOptimize(g.roll);
    }
}
BENCHMARK(BM_StarGeometry)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
