// Serial reference kernels against the OpenMP ones.

#include <benchmark/benchmark.h>

#include "nsdecay/diagnostics.hpp"
#include "nsdecay/initial_data.hpp"
#include "nsdecay/integrator.hpp"
#include "nsdecay/parallel.hpp"
#include "nsdecay/spectral.hpp"

using namespace nsdecay;

namespace {

State bench_state(GridPtr g) {
    InitialDataSpec spec;
    return synthesize_initial_data(spec, g, ModelKind::fcns, 3);
}

ModelParams fcns() {
    ModelParams p;
    p.model = ModelKind::fcns;
    return p;
}

kernels::ExecMode mode_of(const benchmark::State& st) {
    return st.range(1) ? kernels::ExecMode::parallel : kernels::ExecMode::serial;
}

void BM_Laplacian(benchmark::State& st) {
    const auto g = make_grid(static_cast<int>(st.range(0)), 8.0 * kPi);
    const State s = bench_state(g);
    kernels::ScopedExec mode(mode_of(st));
    for (auto _ : st) benchmark::DoNotOptimize(laplacian(s.a));
}

void BM_Hk_norm(benchmark::State& st) {
    const auto g = make_grid(static_cast<int>(st.range(0)), 8.0 * kPi);
    const State s = bench_state(g);
    kernels::ScopedExec mode(mode_of(st));
    for (auto _ : st) benchmark::DoNotOptimize(hk_norm(s.u, 2));
}

void BM_Nonlinear(benchmark::State& st) {
    const auto g = make_grid(static_cast<int>(st.range(0)), 8.0 * kPi);
    const State s = bench_state(g);
    const ModelParams p = fcns();
    kernels::ScopedExec mode(mode_of(st));
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear_fcns(s, p));
}

void BM_Step(benchmark::State& st) {
    const auto g = make_grid(static_cast<int>(st.range(0)), 8.0 * kPi);
    const State s = bench_state(g);
    const PropagatorCache cache(g, fcns(), 0.05);
    kernels::ScopedExec mode(mode_of(st));
    for (auto _ : st) benchmark::DoNotOptimize(step(s, cache));
}

void BM_Snapshot(benchmark::State& st) {
    const auto g = make_grid(static_cast<int>(st.range(0)), 8.0 * kPi);
    const State s = bench_state(g);
    const ModelParams p = fcns();
    kernels::ScopedExec mode(mode_of(st));
    for (auto _ : st) benchmark::DoNotOptimize(snapshot(s, p));
}

// Second argument: 0 = serial reference, 1 = OpenMP.
#define NSDECAY_BENCH(fn) BENCHMARK(fn)->ArgsProduct({{32, 48}, {0, 1}})->Unit(benchmark::kMillisecond)

NSDECAY_BENCH(BM_Laplacian);
NSDECAY_BENCH(BM_Hk_norm);
NSDECAY_BENCH(BM_Nonlinear);
NSDECAY_BENCH(BM_Step);
NSDECAY_BENCH(BM_Snapshot);

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
