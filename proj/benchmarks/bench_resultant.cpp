#include <benchmark/benchmark.h>

#include "knotcv/polyalg.hpp"

using namespace knotcv;

namespace {

const std::vector<std::string> kXZ{"x", "z"};

MultiPoly component() {
    return MultiPoly::parse("z^2 - (1 + x^2) z + 2 x^2 - 1", kXZ);
}

MultiPoly slope31_condition() {
    return MultiPoly::parse(
        "(x^2-1)((4 x - x^3) z + x^5 - 4 x^3 - x) - x (x^4 - 5 x^2 + 2) - 2", kXZ);
}

}  // namespace

static void BM_resultant_subresultant(benchmark::State& state) {
    MultiPoly f = component();
    MultiPoly g = slope31_condition();
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant(f, g, 1));
    }
}
BENCHMARK(BM_resultant_subresultant);

static void BM_resultant_sylvester(benchmark::State& state) {
    MultiPoly f = component();
    MultiPoly g = slope31_condition();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sylvester_resultant(f, g, 1));
    }
}
BENCHMARK(BM_resultant_sylvester);

static void BM_gcd_curve_factors(benchmark::State& state) {
    MultiPoly a = MultiPoly::parse("x^2 - z - 2", kXZ);
    MultiPoly b = component();
    MultiPoly f = a * b;
    MultiPoly g = a * MultiPoly::parse("z + 5", kXZ);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_gcd(f, g));
    }
}
BENCHMARK(BM_gcd_curve_factors);

BENCHMARK_MAIN();
