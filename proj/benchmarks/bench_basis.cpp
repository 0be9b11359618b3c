#include <benchmark/benchmark.h>

#include "chebadj/chebyshev.hpp"
#include "chebadj/polynomials.hpp"

using namespace chebadj;

namespace {

TrigPoly dense_trig(long degree) {
    TrigPoly p;
    for (long k = 0; k <= degree; ++k) p.set(k, Rational(k + 1, 2 * k + 3));
    return p;
}

void BM_trig_to_power(benchmark::State& state) {
    const TrigPoly p = dense_trig(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(trig_to_power(p));
}
BENCHMARK(BM_trig_to_power)->Arg(64)->Arg(256)->Arg(1024);

void BM_round_trip(benchmark::State& state) {
    const TrigPoly p = dense_trig(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power_to_trig(trig_to_power(p)));
}
BENCHMARK(BM_round_trip)->Arg(32)->Arg(128);

void BM_build_T_invert(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(invert(build_T(n)));
}
BENCHMARK(BM_build_T_invert)->Arg(8)->Arg(16)->Arg(24);

} // namespace
