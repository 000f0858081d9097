#include <benchmark/benchmark.h>

#include <hahn/blowup.hpp>
#include <hahn/series.hpp>
#include <hahn/tempered.hpp>

namespace
{

using namespace hahn;

numeric_context exact()
{
    return {};
}

numeric_context floating()
{
    numeric_context ctx;
    ctx.arithmetic = mode::floating;
    return ctx;
}

// 1 + t^(1/3) + t^(1/2) + ... with n terms on a mixed exponent grid.
series dense(int n)
{
    std::vector<term> terms;
    for (int k = 0; k < n; ++k) {
        terms.push_back(term{scalar(mpq_class(k, k % 2 == 0 ? 3 : 2)), scalar(mpq_class(k + 1, 7))});
    }
    return series::from_terms(std::move(terms), std::nullopt);
}

void series_mul(benchmark::State &state)
{
    const auto a = dense(static_cast<int>(state.range(0)));
    const auto b = dense(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(series_mul)->Arg(8)->Arg(32)->Arg(64);

void series_invert(benchmark::State &state)
{
    const auto a = dense(6);
    const scalar target(mpq_class(static_cast<long>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(a, target));
    }
}
BENCHMARK(series_invert)->Arg(2)->Arg(4)->Arg(6);

void exp_exact(benchmark::State &state)
{
    const auto ctx = exact();
    const auto a = series::t_power(scalar(mpq_class(1, 2))) + series::t_power(scalar(1));
    const scalar target(mpq_class(static_cast<long>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_series(a, target, ctx));
    }
}
BENCHMARK(exp_exact)->Arg(2)->Arg(4)->Arg(6);

void log_float(benchmark::State &state)
{
    const auto ctx = floating();
    const auto b = series::constant(promote(scalar(3), ctx)) + series::t_power(scalar(mpq_class(1, 3)));
    const scalar target(mpq_class(static_cast<long>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_series(b, target, ctx));
    }
}
BENCHMARK(log_float)->Arg(2)->Arg(4);

void evenup(benchmark::State &state)
{
    lambda_class u;
    u.set(0, oclass(0, 1));
    u.set(1, oclass(1, 1));
    const auto m = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evenup_plan(u, {m, m}, 4));
    }
}
BENCHMARK(evenup)->Arg(8)->Arg(64);

} // namespace

BENCHMARK_MAIN();
