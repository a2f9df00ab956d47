#include <benchmark/benchmark.h>

#include "bellmix/chsh.hpp"
#include "bellmix/eigen.hpp"
#include "bellmix/measures.hpp"
#include "bellmix/sampling.hpp"

using namespace bellmix;

static void BM_HermitianEigenvalues(benchmark::State& state) {
    const DensityMatrix rho = sample_hilbert_schmidt(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(rho.matrix()));
    }
}
BENCHMARK(BM_HermitianEigenvalues);

static void BM_Tangle(benchmark::State& state) {
    const DensityMatrix rho = sample_hilbert_schmidt(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tangle(rho));
    }
}
BENCHMARK(BM_Tangle);

static void BM_MeasureAll(benchmark::State& state) {
    const DensityMatrix rho = sample_hilbert_schmidt(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_all(rho));
    }
}
BENCHMARK(BM_MeasureAll);

static void BM_SampleHilbertSchmidt(benchmark::State& state) {
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_hilbert_schmidt(seed++));
    }
}
BENCHMARK(BM_SampleHilbertSchmidt);

static void BM_ChshOptimize(benchmark::State& state) {
    const DensityMatrix rho = sample_hilbert_schmidt(7);
    const int restarts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chsh_optimize(rho, restarts, 5));
    }
}
BENCHMARK(BM_ChshOptimize)->Arg(1)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
