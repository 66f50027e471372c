#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "ageal/builtins.hpp"
#include "ageal/decomposition.hpp"
#include "ageal/errors.hpp"
#include "ageal/smallrng.hpp"
#include "doctest.h"

using namespace ageal;

namespace {

FiniteStructure path(int n) {
    FiniteStructure s(kind_signature(StructureKind::graph), n);
    for (int i = 0; i + 1 < n; ++i) s.add_pair(0, i, i + 1);
    return s;
}

Partition normalized(Partition p) {
    for (std::vector<int>& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace

TEST_CASE("monomorphic parts of a path") {
    FiniteStructure p = path(4);
    SubsetForms table(p);
    // singletons and the empty set always qualify
    CHECK(is_monomorphic_part(table, 0b0000u));
    for (int v = 0; v < 4; ++v) CHECK(is_monomorphic_part(table, 1u << v));
    // the two endpoints do not: {0,1} is an edge, {1,3} is not
    CHECK_FALSE(is_monomorphic_part(table, 0b1001u));
    CHECK_FALSE(is_monomorphic_part(p, std::vector<int>{0, 3}));
}

TEST_CASE("cocliques are monomorphic as a whole") {
    FiniteStructure s(kind_signature(StructureKind::graph), 5);
    SubsetForms table(s);
    CHECK(is_monomorphic_part(table, 0b11111u));
    CHECK(minimal_decomposition_pairwise(s) == Partition{{0, 1, 2, 3, 4}});
}

TEST_CASE("path decomposition splits into singletons") {
    // in a 4-path no two distinct vertices sit in one monomorphic part
    Partition p = normalized(minimal_decomposition_bruteforce(path(4)));
    CHECK(p == Partition{{0}, {1}, {2}, {3}});
}

TEST_CASE("bruteforce and pairwise decompositions agree") {
    for (StructureKind kind : {StructureKind::graph, StructureKind::digraph, StructureKind::tournament})
        for (int n = 1; n <= 5; ++n)
            for (const FiniteStructure& s : enumerate_unlabelled_structures(n, kind, 6)) {
                SubsetForms table(s);
                CHECK(normalized(minimal_decomposition_bruteforce(s, table)) ==
                      normalized(minimal_decomposition_pairwise(s, table)));
            }
    SplitMix64 rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        FiniteStructure s = random_structure(StructureKind::graph, 8, rng);
        SubsetForms table(s);
        CHECK(normalized(minimal_decomposition_bruteforce(s, table)) ==
              normalized(minimal_decomposition_pairwise(s, table)));
    }
}

TEST_CASE("decomposition caps") {
    FiniteStructure big(kind_signature(StructureKind::graph), 11);
    CHECK_THROWS_AS(minimal_decomposition_bruteforce(big), cap_exceeded);
    FiniteStructure bigger(kind_signature(StructureKind::graph), 13);
    CHECK_THROWS_AS(minimal_decomposition_pairwise(bigger), cap_exceeded);
}

TEST_CASE("blueprint decompositions of the reference examples") {
    DecompositionReport wheel = decomposition_of_blueprint(builtin_blueprint("wheel-plus-coclique"), 5);
    CHECK(wheel.blocks.size() == 3);
    CHECK(wheel.dimension == 2);
    CHECK(wheel.stabilized);

    DecompositionReport cpc = decomposition_of_blueprint(builtin_blueprint("clique-plus-coclique"), 5);
    CHECK(cpc.blocks.size() == 2);
    CHECK(cpc.dimension == 2);

    DecompositionReport c3 = decomposition_of_blueprint(builtin_blueprint("c3-chains"), 5);
    CHECK(c3.blocks.size() == 3);
    CHECK(c3.dimension == 3);

    DecompositionReport chain = decomposition_of_blueprint(builtin_blueprint("chain"), 5);
    CHECK(chain.blocks.size() == 1);
    CHECK(chain.dimension == 1);
}

TEST_CASE("hereditary minimality separates the wheel from the ladder") {
    CHECK(is_hereditary_minimal(builtin_blueprint("clique-plus-coclique"), 5));
    CHECK_FALSE(is_hereditary_minimal(builtin_blueprint("wheel-plus-coclique"), 5));
    CHECK(is_finitely_generated(builtin_blueprint("k-cliques:3"), 5));
    CHECK_FALSE(is_finitely_generated(builtin_blueprint("wheel-plus-coclique"), 5));
}

TEST_CASE("kernel of the wheel is the hub") {
    KernelReport wheel = kernel_elements(builtin_blueprint("wheel-plus-coclique"), 5);
    CHECK(wheel.elements == std::vector<int>{0});
    CHECK(wheel.template_blocks == std::vector<int>{0});
    CHECK(wheel.stabilized);
    KernelReport cpc = kernel_elements(builtin_blueprint("clique-plus-coclique"), 5);
    CHECK(cpc.elements.empty());
    CHECK(cpc.template_blocks.empty());
}

TEST_CASE("tournament finite generation") {
    TournamentFgReport chain = tournament_finite_generation(builtin_blueprint("chain"), 5);
    CHECK(chain.finitely_generated);
    TournamentFgReport c3 = tournament_finite_generation(builtin_blueprint("c3-chains"), 5);
    CHECK_FALSE(c3.finitely_generated);
    CHECK(c3.decomposition.dimension == 3);
    // agreement with the decomposition-based verdict
    CHECK(chain.finitely_generated == is_finitely_generated(builtin_blueprint("chain"), 5));
    CHECK(c3.finitely_generated == is_finitely_generated(builtin_blueprint("c3-chains"), 5));
    // graphs are not tournaments
    CHECK_THROWS_AS(tournament_finite_generation(builtin_blueprint("clique-plus-coclique"), 5),
                    input_error);
}

TEST_CASE("large monomorphic tournament parts are acyclic") {
    TournamentPartScan scan = tournament_remark_check(5);
    CHECK(scan.ok);
    CHECK(scan.structures == 16);  // parts of size >= 4 need >= 4 vertices: 4 + 12 classes
}
