#include <benchmark/benchmark.h>

#include "ricap/estimators.hpp"
#include "ricap/special.hpp"

namespace {

using namespace ricap;

void BM_hermitian_eigen(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(1, 0);
    std::vector<cdouble> e(static_cast<size_t>(n) * n);
    ComplexMatrix a(n, n, std::vector<cdouble>(static_cast<size_t>(n) * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, y] = rng.gaussian_pair();
            a(i, j) = cdouble(x, y);
        }
    const HermitianMatrix h = gram(a, GramSide::left);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_hermitian_eigen)->Arg(4)->Arg(8)->Arg(16);

void BM_logdet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(2, 0);
    ComplexMatrix a(n + 2, n, std::vector<cdouble>(static_cast<size_t>(n + 2) * n));
    for (int i = 0; i < n + 2; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, y] = rng.gaussian_pair();
            a(i, j) = cdouble(x, y);
        }
    const HermitianMatrix h = gram(a, GramSide::right);
    for (auto _ : state) benchmark::DoNotOptimize(logdet_posdef(h));
}
BENCHMARK(BM_logdet)->Arg(4)->Arg(16)->Arg(64);

void BM_log_bessel_i(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    double nu = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_bessel_i(nu, x));
        nu = nu < 8.0 ? nu + 1.0 : 0.0;
    }
}
BENCHMARK(BM_log_bessel_i)->Arg(1)->Arg(100)->Arg(10000);

void BM_mc_capacity(benchmark::State& state) {
    const int nt = static_cast<int>(state.range(0));
    const ChannelConfig cfg(nt, 2, 1.0, 1.0);
    const auto q = CovarianceScheme::scaled_identity(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_ergodic_capacity(cfg, q, MonteCarloSpec(1000, 7, 1)));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_mc_capacity)->Arg(2)->Arg(8)->Arg(64);

void BM_quadrature_capacity(benchmark::State& state) {
    const ChannelConfig cfg(1, 4, 10.0, 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_capacity_m1(cfg));
}
BENCHMARK(BM_quadrature_capacity);

} // namespace

BENCHMARK_MAIN();
