#include <benchmark/benchmark.h>

#include <ageal/builtins.hpp>
#include <ageal/groupoid.hpp>

using namespace ageal;

static void GroupoidClosure(benchmark::State& state, const char* name) {
    PermutationGroupoid g = builtin_groupoid(name);
    for (auto _ : state) {
        PermutationGroupoid closed = close(g.k, g.elements);
        benchmark::DoNotOptimize(closed.elements.data());
    }
}
BENCHMARK_CAPTURE(GroupoidClosure, noncm, "noncm");
BENCHMARK_CAPTURE(GroupoidClosure, sym_3, "sym:3");
BENCHMARK_CAPTURE(GroupoidClosure, qsym_3, "qsym:3");

// orbit counting on degree-n monomials is the expensive half of the Hilbert
// prefix; the closure above is computed once
static void HilbertPrefix(benchmark::State& state, const char* name) {
    PermutationGroupoid g = builtin_groupoid(name);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesPrefix dims = hilbert_prefix(g, N);
        benchmark::DoNotOptimize(dims.phi.data());
    }
}
BENCHMARK_CAPTURE(HilbertPrefix, noncm, "noncm")->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(HilbertPrefix, qsym_3, "qsym:3")->Arg(8)->Arg(12);

static void OrbitBasis(benchmark::State& state, const char* name) {
    PermutationGroupoid g = builtin_groupoid(name);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonomialOrbitBasis basis = orbit_basis(g, n);
        benchmark::DoNotOptimize(basis.orbits.data());
    }
}
BENCHMARK_CAPTURE(OrbitBasis, noncm, "noncm")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(OrbitBasis, sym_3, "sym:3")->Arg(4)->Arg(6);

BENCHMARK_MAIN();
