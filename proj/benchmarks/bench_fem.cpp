#include <benchmark/benchmark.h>

#include "wlab/fem.hpp"
#include "wlab/mesh.hpp"

using namespace wlab;

static void BM_Assemble(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const Mesh m = gen_polar_mesh(DiskSpec{1.0}, nr, 4 * nr);
    for (auto _ : state) {
        DtNSystem s = assemble(m);
        benchmark::DoNotOptimize(s.A);
    }
    state.SetComplexityN(m.num_vertices());
}
BENCHMARK(BM_Assemble)->Arg(8)->Arg(16)->Arg(32)->Complexity();

static void BM_DtnMatrix(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const Mesh m = gen_polar_mesh(DiskSpec{1.0}, nr, 4 * nr);
    const DtNSystem s = assemble(m);
    for (auto _ : state) {
        Eigen::MatrixXd N = dtn_matrix(s);
        benchmark::DoNotOptimize(N);
    }
}
BENCHMARK(BM_DtnMatrix)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_WentzelSpectrum(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const Mesh m = gen_polar_mesh(DiskSpec{1.0}, nr, 4 * nr);
    const DtNSystem s = assemble(m);
    const Eigen::MatrixXd N = dtn_matrix(s);
    for (auto _ : state) {
        DiscreteSpectra spec = solve_spectrum_with(N, s, 1.0, 10);
        benchmark::DoNotOptimize(spec.values);
    }
}
BENCHMARK(BM_WentzelSpectrum)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_HarmonicExtension(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const Mesh m = gen_polar_mesh(DiskSpec{1.0}, nr, 4 * nr);
    const DtNSystem s = assemble(m);
    Eigen::VectorXd data(s.boundary_size());
    for (int b = 0; b < s.boundary_size(); ++b) data[b] = m.vertices[s.boundary[b]].x();
    for (auto _ : state) {
        Eigen::VectorXd field = harmonic_extension(s, data);
        benchmark::DoNotOptimize(field);
    }
}
BENCHMARK(BM_HarmonicExtension)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
