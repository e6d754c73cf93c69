#include <benchmark/benchmark.h>

#include "knotcv/roots.hpp"

using namespace knotcv;

static void BM_aberth_degree20(benchmark::State& state) {
    // Wilkinson-style stress: roots 1..20 scaled into the unit box.
    std::vector<Complex> coeffs{{1.0, 0.0}};
    for (int r = 1; r <= 20; ++r) {
        std::vector<Complex> next(coeffs.size() + 1, Complex(0.0, 0.0));
        Complex root(static_cast<double>(r) / 20.0, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * root;
        }
        coeffs = next;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(aberth(coeffs));
    }
}
BENCHMARK(BM_aberth_degree20);

static void BM_complex_roots_with_multiplicity(benchmark::State& state) {
    MultiPoly p = MultiPoly::parse("(x^2 - 2 x - 1)^2 (x^2 + 1)^3 (x - 4)", {"x"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(complex_roots(p, 1e-8));
    }
}
BENCHMARK(BM_complex_roots_with_multiplicity);

BENCHMARK_MAIN();
