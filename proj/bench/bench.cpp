// Serial reference vs OpenMP kernels on the two hot loops: the c_n series and
// the bathtub quadrature.

#include <benchmark/benchmark.h>

#include <cmath>

#include "hk/isoperimetry.hpp"
#include "hk/kernels.hpp"
#include "hk/weyl.hpp"

using hk::kernels::Exec;

namespace {

template <Exec E>
void BM_SumSeries(benchmark::State& st) {
    const auto count = static_cast<std::uint64_t>(st.range(0));
    auto term = [](std::uint64_t m) {
        double u = 2.0 * m + 5.0;
        return (m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0) / (24.0 * std::pow(u, 6.0));
    };
    for (auto _ : st) benchmark::DoNotOptimize(hk::kernels::sum_series(term, count, E));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <Exec E>
void BM_CnSeries(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(hk::cn_series(n, 1e-7, E));
}

template <Exec E>
void BM_Integrate(benchmark::State& st) {
    const auto panels = st.range(0);
    auto f = [](double x) { return std::pow(std::sin(x), 4.0 / 3.0); };
    for (auto _ : st) benchmark::DoNotOptimize(hk::kernels::integrate(f, 0.0, M_PI, panels, E));
    st.SetItemsProcessed(st.iterations() * panels * 16);
}

template <Exec E>
void BM_BathtubOracle(benchmark::State& st) {
    const int grid = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(hk::bathtub_oracle(2, grid, E));
}

}  // namespace

BENCHMARK(BM_SumSeries<Exec::Serial>)->RangeMultiplier(8)->Range(1 << 16, 1 << 22);
BENCHMARK(BM_SumSeries<Exec::Parallel>)->RangeMultiplier(8)->Range(1 << 16, 1 << 22);
BENCHMARK(BM_CnSeries<Exec::Serial>)->Arg(3)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CnSeries<Exec::Parallel>)->Arg(3)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Integrate<Exec::Serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_Integrate<Exec::Parallel>)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_BathtubOracle<Exec::Serial>)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BathtubOracle<Exec::Parallel>)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
