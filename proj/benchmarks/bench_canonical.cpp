#include <benchmark/benchmark.h>

#include <ageal/smallrng.hpp>
#include <ageal/structure.hpp>

using namespace ageal;

// random graphs are the hardest case for the refinement search: few
// automorphisms, so the leaf certificate rarely prunes early
static void CanonicalRandomGraph(benchmark::State& state) {
    SplitMix64 rng(12345);
    std::vector<FiniteStructure> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_structure(StructureKind::graph, static_cast<int>(state.range(0)), rng));
    size_t at = 0;
    for (auto _ : state) {
        CanonicalForm form = canonical_form(inputs[at]);
        benchmark::DoNotOptimize(form.bytes.data());
        at = (at + 1) % inputs.size();
    }
}
BENCHMARK(CanonicalRandomGraph)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

static void CanonicalRandomDigraph(benchmark::State& state) {
    SplitMix64 rng(99);
    std::vector<FiniteStructure> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_structure(StructureKind::digraph, static_cast<int>(state.range(0)), rng));
    size_t at = 0;
    for (auto _ : state) {
        CanonicalForm form = canonical_form(inputs[at]);
        benchmark::DoNotOptimize(form.bytes.data());
        at = (at + 1) % inputs.size();
    }
}
BENCHMARK(CanonicalRandomDigraph)->Arg(8)->Arg(16)->Arg(32);

// a disjoint union of equal cliques maximizes automorphisms, the opposite
// stress profile to the random case
static void CanonicalCliqueUnion(benchmark::State& state) {
    const int parts = static_cast<int>(state.range(0)), size = 4;
    FiniteStructure s(kind_signature(StructureKind::graph), parts * size);
    for (int p = 0; p < parts; ++p)
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v) s.add_pair(0, p * size + u, p * size + v);
    for (auto _ : state) {
        CanonicalForm form = canonical_form(s);
        benchmark::DoNotOptimize(form.bytes.data());
    }
}
BENCHMARK(CanonicalCliqueUnion)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
