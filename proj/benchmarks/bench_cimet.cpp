#include <benchmark/benchmark.h>

#include <cimet/bounds.hpp>
#include <cimet/geom.hpp>
#include <cimet/metrics.hpp>
#include <cimet/rng.hpp>
#include <cimet/specfun.hpp>

namespace {

using namespace cimet;

const Point kX = Point::xy(0.6, 0.3);
const Point kY = Point::xy(0.1, 0.1);
const DomainSpec kDisk = DomainSpec::unit_ball(2);

void BM_agm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(agm(1.0, 0.7071067811865476));
}
BENCHMARK(BM_agm);

void BM_ellip_k(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ellip_k(0.9));
}
BENCHMARK(BM_ellip_k);

void BM_grotzsch_mu(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(grotzsch_mu(UnitInterval(0.5)));
}
BENCHMARK(BM_grotzsch_mu);

void BM_gamma2(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma2(CapacityArg(2.0)));
}
BENCHMARK(BM_gamma2);

void BM_constant_cn_4(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(constant_cn(Dimension(4)));
}
BENCHMARK(BM_constant_cn_4);

void BM_rho_ball(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(rho_ball(kX, kY));
}
BENCHMARK(BM_rho_ball);

void BM_mu_metric(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mu_metric(kDisk, kX, kY));
}
BENCHMARK(BM_mu_metric);

void BM_lambda_metric(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_metric(kDisk, kX, kY));
}
BENCHMARK(BM_lambda_metric);

void BM_th_half_rho_rotated(benchmark::State& state) {
    const RotationParams p = rotation_params(kX, kY);
    for (auto _ : state)
        benchmark::DoNotOptimize(th_half_rho_rotated(p));
}
BENCHMARK(BM_th_half_rho_rotated);

void BM_rho_bounds_midpoint(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(rho_bounds_midpoint(kX, kY));
}
BENCHMARK(BM_rho_bounds_midpoint);

void BM_mu_bounds_midpoint(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mu_bounds_midpoint(kX, kY));
}
BENCHMARK(BM_mu_bounds_midpoint);

void BM_lambda_bounds(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_bounds(Dimension(2), 1.2));
}
BENCHMARK(BM_lambda_bounds);

void BM_arth_th_power(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(arth_th_power(1.0, 4.0));
}
BENCHMARK(BM_arth_th_power);

// end-to-end cost of one randomized verify-style sample
void BM_sampled_mu_lambda_product(benchmark::State& state) {
    SplitMix64 rng(42);
    for (auto _ : state) {
        const double a = 0.9 * rng.uniform01();
        const double b = 0.9 * rng.uniform01() - 0.45;
        const Point x = Point::xy(a - 0.45, b);
        const Point y = Point::xy(b * 0.5, a * 0.5 - 0.2);
        benchmark::DoNotOptimize(mu_metric(kDisk, x, y) * lambda_metric(kDisk, x, y));
    }
}
BENCHMARK(BM_sampled_mu_lambda_product);

} // namespace

BENCHMARK_MAIN();
