// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qssa/approx.hpp"
#include "qssa/kernels.hpp"

using namespace qssa;

namespace {

const RateConstants kSegel{4e6, 25.0, 15.0};

std::vector<double> log_grid(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = 1e-4 * std::pow(1e7, double(i) / double(n - 1));
    return t;
}

template <bool Parallel>
void BM_curve(benchmark::State& state) {
    const auto t = log_grid(static_cast<std::size_t>(state.range(0)));
    const ApproxCurve curve = sqssa_free(kSegel, {1e-5, 1e-8, 0, 0}).uniform;
    std::vector<double> s(t.size()), c(t.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::evaluate_curve(curve, t, s, c);
        } else {
            kernels::serial::evaluate_curve(curve, t, s, c);
        }
        benchmark::DoNotOptimize(s.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_lambert(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> x(n), w(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(10.0, -12.0 + 24.0 * double(i) / double(n - 1));
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::lambert_w0(x, w);
        } else {
            kernels::serial::lambert_w0(x, w);
        }
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_norms(benchmark::State& state) {
    const auto t = log_grid(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<double> a(t.size()), r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        a[i] = g(rng);
        r[i] = g(rng);
    }
    for (auto _ : state) {
        const auto n = Parallel ? kernels::error_norms(t, a, r, 1.0)
                                : kernels::serial::error_norms(t, a, r, 1.0);
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_stability(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> lg(-6.0, 6.0);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<kernels::StabilityCase> cases;
    for (int i = 0; i < state.range(0); ++i) {
        kernels::StabilityCase c{RateConstants(std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)),
                                               std::pow(10.0, lg(rng))),
                                 std::pow(10.0, lg(rng)),
                                 {}};
        for (int j = 0; j < 100; ++j) c.interior.push_back({u(rng), u(rng)});
        cases.push_back(std::move(c));
    }
    for (auto _ : state) {
        auto res = Parallel ? kernels::stability_sweep(cases) : kernels::serial::stability_sweep(cases);
        benchmark::DoNotOptimize(res.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_curve<false>)->Name("curve/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_curve<true>)->Name("curve/openmp")->Arg(1 << 14)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_lambert<false>)->Name("lambert_w/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_lambert<true>)->Name("lambert_w/openmp")->Arg(1 << 14)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_norms<false>)->Name("error_norms/serial")->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_norms<true>)->Name("error_norms/openmp")->Arg(1 << 14)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_stability<false>)->Name("stability/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_stability<true>)->Name("stability/openmp")->Arg(1000)->Arg(10000)->UseRealTime();

BENCHMARK_MAIN();
