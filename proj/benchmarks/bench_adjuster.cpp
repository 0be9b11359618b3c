#include <benchmark/benchmark.h>

#include "chebadj/adjuster.hpp"
#include "chebadj/bounds.hpp"
#include "chebadj/vandermonde.hpp"

using namespace chebadj;

namespace {

void BM_construct(benchmark::State& state) {
    const long r = state.range(0);
    const AdjustmentProblem problem{1, 1, r, {Rational(1)}};
    for (auto _ : state) benchmark::DoNotOptimize(construct_b(problem));
}
BENCHMARK(BM_construct)->Arg(37)->Arg(200)->Arg(1000);

void BM_construct_lean_p2(benchmark::State& state) {
    const long r = state.range(0);
    const AdjustmentProblem problem{2, 1, r, {Rational(1), Rational(1)}};
    for (auto _ : state) benchmark::DoNotOptimize(construct_b(problem, {false}));
}
BENCHMARK(BM_construct_lean_p2)->Arg(100)->Arg(1000)->Arg(6075);

void BM_w_dagger_closed(benchmark::State& state) {
    const long r = state.range(0);
    for (auto _ : state) {
        Rational acc;
        for (long q = 0; q < 4; ++q)
            for (long k = 0; k < r; ++k) acc += w_dagger_closed(q, k, 2, r);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_w_dagger_closed)->Arg(20)->Arg(40);

void BM_A_sum(benchmark::State& state) {
    const long r = state.range(0);
    for (auto _ : state) {
        BigInt acc(0);
        for (long k = 3; k < r; ++k) acc += A_sum(3, k, r);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_A_sum)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
