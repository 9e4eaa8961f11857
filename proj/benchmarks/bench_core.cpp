#include <benchmark/benchmark.h>

#include "besov/geometry.hpp"
#include "besov/inequalities.hpp"
#include "besov/norms.hpp"
#include "besov/random.hpp"
#include "besov/reconstruct.hpp"
#include "besov/zoo.hpp"

using namespace besov;

namespace {

const WaveletBasis& db4() {
    static const WaveletBasis b = WaveletBasis::daubechies(4);
    return b;
}

GridFunction gauss() { return make(gaussian_spec(0.0, 1.0), default_grid_1d()).f; }

} // namespace

static void BM_Analyze(benchmark::State& st) {
    const auto f = gauss();
    for (auto _ : st) benchmark::DoNotOptimize(analyze(f, db4(), -4, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_Analyze)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BesovNormWavelet(benchmark::State& st) {
    const auto f = gauss();
    for (auto _ : st) benchmark::DoNotOptimize(besov_norm_of(f, {0.5, 2.0, 1.0, 1}, db4()).norm);
}
BENCHMARK(BM_BesovNormWavelet)->Unit(benchmark::kMillisecond);

static void BM_BesovNormLP(benchmark::State& st) {
    const auto f = gauss();
    for (auto _ : st) benchmark::DoNotOptimize(besov_norm_lp(f, {0.5, 2.0, 1.0, 1}));
}
BENCHMARK(BM_BesovNormLP)->Unit(benchmark::kMillisecond);

static void BM_SamplingRatio(benchmark::State& st) {
    const auto f = make(bandlimited_spec(1.0, 1), default_grid_1d()).f;
    const auto seq = SamplingSequence1D::random(0x1.0p-5, -14.0, 14.0, 1);
    for (auto _ : st) benchmark::DoNotOptimize(sampling_ratio(f, seq).cell_ratio);
}
BENCHMARK(BM_SamplingRatio)->Unit(benchmark::kMillisecond);

static void BM_ReconstructStep(benchmark::State& st) {
    const auto grid = Grid1D::span(-32.0, 32.0, 0x1.0p-9);
    const auto f = make(bandlimited_spec(1.0, 1, 4, 1.0), grid).f;
    const auto seq = SamplingSequence1D::random(0x1.0p-6, -24.0, 24.0, 1);
    ReconstructionConfig cfg;
    cfg.iterations = 1;
    cfg.override_contraction = true;
    const Reconstructor r(seq, grid, cfg);
    const auto t = r.T(f);
    for (auto _ : st) benchmark::DoNotOptimize(r.reconstruct(t).second.residuals);
}
BENCHMARK(BM_ReconstructStep)->Unit(benchmark::kMillisecond);

static void BM_GeometryCheck(benchmark::State& st) {
    GeometryParams gp;
    gp.variant = GeometryVariant::Hyperplanes;
    gp.b = 0.125;
    const auto g = SamplingGeometry2D::build(gp);
    ConditionsOptions opt;
    opt.n_probes = 200;
    for (auto _ : st) benchmark::DoNotOptimize(check_conditions(g, opt).c0);
}
BENCHMARK(BM_GeometryCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
