#include <benchmark/benchmark.h>

#include <vector>

#include "sobolab/criteria.hpp"
#include "sobolab/measures.hpp"
#include "sobolab/moment_matrix.hpp"
#include "sobolab/numkernel.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/sobolev.hpp"

namespace {

using namespace sobolab;

SobolevPencil example6()
{
    return SobolevPencil(MomentMatrix::of_measure(Measure::unit_circle()),
                         MomentMatrix::of_measure(Measure::circle(0.5, 2.0)));
}

void BM_GramSection(benchmark::State& state)
{
    const auto p = example6();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_section(p, n));
    }
}
BENCHMARK(BM_GramSection)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_MultOpNorm(benchmark::State& state)
{
    const auto p = example6();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mult_op_norm(p, n));
    }
}
BENCHMARK(BM_MultOpNorm)->Arg(8)->Arg(16)->Arg(32);

void BM_GammaIndex(benchmark::State& state)
{
    const auto m = MomentMatrix::of_measure(Measure::unit_circle());
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_index(m, cplx(0.3, 0.4), n));
    }
}
BENCHMARK(BM_GammaIndex)->Arg(8)->Arg(16)->Arg(32);

void BM_GammaViaKernel(benchmark::State& state)
{
    const auto m = MomentMatrix::of_measure(Measure::unit_circle());
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_via_kernel(m, cplx(0.3, 0.4), n));
    }
}
BENCHMARK(BM_GammaViaKernel)->Arg(8)->Arg(16)->Arg(32);

void BM_CompanionRoots(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    std::vector<cplx> c(static_cast<std::size_t>(d) + 1, cplx(0.0));
    c.front() = -1.0;
    c.back() = 1.0;
    const PolyCoeffs p(std::move(c));
    for (auto _ : state) {
        benchmark::DoNotOptimize(companion_roots(p));
    }
}
BENCHMARK(BM_CompanionRoots)->Arg(8)->Arg(20)->Arg(40);

void BM_SobolevZeros(benchmark::State& state)
{
    const auto p = example6();
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sobolev_zeros(p, d));
    }
}
BENCHMARK(BM_SobolevZeros)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
