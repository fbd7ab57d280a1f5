#include <benchmark/benchmark.h>

#include <numbers>
#include <utility>
#include <vector>

#include "birefsim/oracle.hpp"
#include "birefsim/pulse.hpp"
#include "birefsim/sweeps.hpp"
#include "birefsim/timeshift.hpp"

namespace {

constexpr double pi = std::numbers::pi;

const birefsim::CrystalMedium& medium() {
    static const birefsim::CrystalMedium m{1.225, 1.375};
    return m;
}

void BM_filtered_amplitude(benchmark::State& state) {
    double beta = 0.2, dkd = 2.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(birefsim::filtered_amplitude(beta, dkd));
        beta += 1e-6;
        dkd += 1e-6;
    }
}
BENCHMARK(BM_filtered_amplitude);

void BM_modulus_and_phase(benchmark::State& state) {
    double beta = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(birefsim::modulus_and_phase(beta, 2.9));
        beta += 1e-6;
    }
}
BENCHMARK(BM_modulus_and_phase);

void BM_time_shift(benchmark::State& state) {
    double dkd = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(birefsim::time_shift(medium(), 0.2 * pi, dkd));
        dkd += 1e-6;
    }
}
BENCHMARK(BM_time_shift);

void BM_envelope_f(benchmark::State& state) {
    double xi = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(birefsim::envelope_f(xi, 0.21 * pi, 2.6, 0.15));
        xi += 1e-7;
    }
}
BENCHMARK(BM_envelope_f);

void BM_closed_form_field(benchmark::State& state) {
    const auto pulse = birefsim::GaussianPulse::tuned(medium(), 0, 4.0);
    double x = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(birefsim::closed_form_field(x, 1.0, medium(), 0.21 * pi, pulse));
        x += 1e-7;
    }
}
BENCHMARK(BM_closed_form_field);

void BM_find_extrema(benchmark::State& state) {
    const double mu = state.range(0) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(birefsim::find_extrema(0.21 * pi, mu, 0.15));
}
BENCHMARK(BM_find_extrema)->Arg(260)->Arg(25);

void BM_quadrature_field(benchmark::State& state) {
    const auto pulse = birefsim::GaussianPulse::tuned(medium(), 0, 4.0);
    const birefsim::QuadratureSpec spec{static_cast<int>(state.range(0)), 8.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            birefsim::quadrature_field(3.0, 1.5, medium(), 0.21 * pi, pulse, spec));
}
BENCHMARK(BM_quadrature_field)->Arg(2048)->Arg(4096);

void BM_timeshift_map(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const birefsim::GridSpec grid{{0.25 * pi - 0.35, 0.25 * pi + 0.05, n},
                                  {pi - 0.4, pi + 0.4, n}};
    for (auto _ : state)
        benchmark::DoNotOptimize(birefsim::timeshift_map(medium(), grid));
}
BENCHMARK(BM_timeshift_map)->Arg(100)->Arg(400);

} // namespace

BENCHMARK_MAIN();
