#include <benchmark/benchmark.h>

#include "rsaux/audit.hpp"
#include "rsaux/contour.hpp"
#include "rsaux/regions.hpp"
#include "rsaux/saddle.hpp"

using namespace rsaux;

namespace {

void BM_oracle_moderate(benchmark::State& state) {
    const cplx s(-8.0, 21.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(r_defining(s, 1e-10).value);
    }
}
BENCHMARK(BM_oracle_moderate);

void BM_oracle_deep_left(benchmark::State& state) {
    const cplx s(-55.0, 70.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(r_defining(s, 1e-10).value);
    }
}
BENCHMARK(BM_oracle_deep_left);

void BM_expansion(benchmark::State& state) {
    const cplx s(-55.0, 70.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(s, 1e-9).r_value.log_modulus);
    }
}
BENCHMARK(BM_expansion);

void BM_expansion_far(benchmark::State& state) {
    const cplx eta = std::polar(120.0, 3.0 * pi / 8.0);
    const cplx s = 1.0 + cplx(0.0, 2.0 * pi) * eta * eta;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(s, 1e-9).r_value.log_modulus);
    }
}
BENCHMARK(BM_expansion_far);

void BM_bound_certificate(benchmark::State& state) {
    const EtaFrame f = eta_frame({-3969.6, 17423.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_U(f).log_u_bound);
    }
}
BENCHMARK(BM_bound_certificate);

void BM_classify_grid(benchmark::State& state) {
    const RegionParams params;
    for (auto _ : state) {
        long in_g = 0;
        for (double sigma = -30000.0; sigma <= 0.0; sigma += 600.0) {
            for (double t = 0.0; t <= 3000.0; t += 150.0) {
                in_g += classify({sigma, t}, params).count(Region::G);
            }
        }
        benchmark::DoNotOptimize(in_g);
    }
}
BENCHMARK(BM_classify_grid);

void BM_audit_series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit_lemma_series().computed_value);
    }
}
BENCHMARK(BM_audit_series);

} // namespace

BENCHMARK_MAIN();
