#include <benchmark/benchmark.h>

#include <ageal/blueprint.hpp>
#include <ageal/builtins.hpp>
#include <ageal/decomposition.hpp>
#include <ageal/smallrng.hpp>
#include <ageal/structure.hpp>

using namespace ageal;

// profile cost is dominated by iso-type classification of the blow-ups of
// every composition vector of weight n
static void ProfilePrefix(benchmark::State& state, const char* name) {
    Blueprint b = builtin_blueprint(name);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto phi = profile_prefix(b, N);
        benchmark::DoNotOptimize(phi.data());
    }
}
BENCHMARK_CAPTURE(ProfilePrefix, clique_plus_coclique, "clique-plus-coclique")->Arg(8)->Arg(12)->Arg(16);
BENCHMARK_CAPTURE(ProfilePrefix, c3_chains, "c3-chains")->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(ProfilePrefix, wheel_plus_coclique, "wheel-plus-coclique")->Arg(8)->Arg(12);

static void DecomposeBlueprint(benchmark::State& state, const char* name) {
    Blueprint b = builtin_blueprint(name);
    for (auto _ : state) {
        DecompositionReport d = decomposition_of_blueprint(b, 5);
        benchmark::DoNotOptimize(d.dimension);
    }
}
BENCHMARK_CAPTURE(DecomposeBlueprint, wheel_plus_coclique, "wheel-plus-coclique");
BENCHMARK_CAPTURE(DecomposeBlueprint, c3_chains, "c3-chains");

// the pairwise relation on a single finite structure, the inner loop of the
// exhaustive cross-checks
static void PairwiseDecomposition(benchmark::State& state) {
    SplitMix64 rng(7);
    std::vector<FiniteStructure> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_structure(StructureKind::graph, static_cast<int>(state.range(0)), rng));
    size_t at = 0;
    for (auto _ : state) {
        Partition p = minimal_decomposition_pairwise(inputs[at]);
        benchmark::DoNotOptimize(p.data());
        at = (at + 1) % inputs.size();
    }
}
BENCHMARK(PairwiseDecomposition)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
