#include <benchmark/benchmark.h>

#include "phpos/grid.hpp"
#include "phpos/oracle.hpp"
#include "phpos/specfun.hpp"

using namespace phpos;

static void BM_ellip_KE(benchmark::State& state)
{
    double k = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::ellip_KE(k));
        k = k < 0.99 ? k + 1e-3 : 0.1;
    }
}
BENCHMARK(BM_ellip_KE);

static void BM_profile_table(benchmark::State& state)
{
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto rows = parallel ? grid::profile_table(eigenfield::Family::RS, 0.0, pi, 721)
                             : grid::profile_table_serial(eigenfield::Family::RS, 0.0, pi, 721);
        benchmark::DoNotOptimize(rows.data());
    }
}
BENCHMARK(BM_profile_table)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_field_grid(benchmark::State& state)
{
    const bool parallel = state.range(0) != 0;
    grid::GridSpec g;
    g.nx = g.nz = 101;
    for (auto _ : state) {
        auto rows = parallel ? grid::field_grid(g, grid::FieldFamily::RS, 1)
                             : grid::field_grid_serial(g, grid::FieldFamily::RS, 1);
        benchmark::DoNotOptimize(rows.data());
    }
}
BENCHMARK(BM_field_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_damped_oracle_coarse(benchmark::State& state)
{
    oracle::QuadratureConfig cfg;
    cfg.epsilon_list = {0.4, 0.2, 0.1};
    cfg.richardson_order = 2;
    cfg.k_max = 60.0;
    const Vec3 x(std::sin(0.7), 0.0, std::cos(0.7));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::damped_fourier_oracle(x, oracle::Integrand::psi1, 1.0, 1, cfg).value);
}
BENCHMARK(BM_damped_oracle_coarse)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
