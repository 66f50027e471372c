#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "ageal/builtins.hpp"
#include "ageal/errors.hpp"
#include "ageal/structure.hpp"
#include "doctest.h"

using namespace ageal;

namespace {

long partitions_at_most(int n, int k) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

}  // namespace

TEST_CASE("builtin names parse and unknown names are rejected") {
    for (const std::string& name : all_builtin_names()) CHECK_NOTHROW(builtin_blueprint(name));
    CHECK_THROWS_AS(builtin_blueprint("no-such-blueprint"), input_error);
    CHECK_THROWS_AS(builtin_blueprint("k-cliques:0"), input_error);
    CHECK_THROWS_AS(builtin_blueprint("k-cliques:11"), input_error);
    CHECK_THROWS_AS(builtin_blueprint("matching-window:999"), input_error);
}

TEST_CASE("blueprint validation") {
    auto sig = make_signature({{"adj", 2, true, true}});
    FiniteStructure tmpl(sig, 2);
    tmpl.add_pair(0, 0, 1);
    const BlockSpec omega_empty{BlockSpec::omega, InnerKind::empty};
    CHECK_NOTHROW(Blueprint(tmpl, {omega_empty, omega_empty}));
    // chains need a non-symmetric adjacency
    CHECK_THROWS_AS(Blueprint(tmpl, {BlockSpec{BlockSpec::omega, InnerKind::chain}, omega_empty}),
                    input_error);
    CHECK_THROWS_AS(Blueprint(tmpl, {omega_empty}), input_error);  // size mismatch
    CHECK_THROWS_AS(Blueprint(tmpl, {BlockSpec{-5, InnerKind::empty}, omega_empty}),
                    input_error);  // negative cardinality that is not omega
}

TEST_CASE("blow-up realizes inner kinds and template adjacency") {
    Blueprint b = builtin_blueprint("clique-plus-coclique");
    FiniteStructure s = blow_up(b, {3, 2});
    CHECK(s.size() == 5);
    // triangle inside the clique block
    CHECK(s.has_pair(0, 0, 1));
    CHECK(s.has_pair(0, 0, 2));
    CHECK(s.has_pair(0, 1, 2));
    // coclique block and the crossing pairs stay empty
    CHECK(s.tuple_count(0) == 3);

    Blueprint wheel = builtin_blueprint("wheel-plus-coclique");
    FiniteStructure w = blow_up(wheel, {1, 3, 2});
    // hub-leaf edges only
    CHECK(w.tuple_count(0) == 3);
    CHECK(w.has_pair(0, 0, 1));
    CHECK(w.has_pair(0, 0, 3));

    Blueprint c3 = builtin_blueprint("c3-chains");
    FiniteStructure t = blow_up(c3, {2, 1, 1});
    // chains are transitive inside blocks, arcs cycle between blocks
    CHECK(t.has_pair(0, 0, 1));
    CHECK(t.has_pair(0, 0, 2));
    CHECK(t.has_pair(0, 2, 3));
    CHECK(t.has_pair(0, 3, 0));
    CHECK_FALSE(t.has_pair(0, 0, 3));
}

TEST_CASE("composition vectors respect capacities") {
    Blueprint wheel = builtin_blueprint("wheel-plus-coclique");
    for (const CompositionVector& v : composition_vectors(wheel, 4)) CHECK(v[0] <= 1);
    CHECK(composition_vectors(wheel, 0).size() == 1);
    // weight 2 over (cap 1, omega, omega): (0,0,2) (0,1,1) (0,2,0) (1,0,1) (1,1,0)
    CHECK(composition_vectors(wheel, 2).size() == 5);
    CHECK_THROWS_AS(blow_up(wheel, {2, 0, 0}), input_error);  // over capacity
}

TEST_CASE("iso types agree with blow-up canonical forms") {
    Blueprint b = builtin_blueprint("c3-chains");
    for (const CompositionVector& v : composition_vectors(b, 4))
        CHECK(iso_type(b, v) == canonical_form(blow_up(b, v)));
}

TEST_CASE("windows truncate omega blocks") {
    Blueprint b = builtin_blueprint("clique-plus-coclique");
    CHECK(window_vector(b, 3) == CompositionVector{3, 3});
    CHECK(window(b, 3).size() == 6);
    Blueprint wheel = builtin_blueprint("wheel-plus-coclique");
    CHECK(window_vector(wheel, 2) == CompositionVector{1, 2, 2});
}

TEST_CASE("frozen profile prefixes") {
    CHECK(profile_prefix(builtin_blueprint("clique-plus-coclique"), 10) ==
          std::vector<long>{1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(profile_prefix(builtin_blueprint("wheel-plus-coclique"), 10) ==
          std::vector<long>{1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(profile_prefix(builtin_blueprint("c3-chains"), 8) ==
          std::vector<long>{1, 1, 1, 2, 2, 3, 5, 6, 8});
    CHECK(profile_prefix(builtin_blueprint("chain"), 7) == std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(profile_prefix(builtin_blueprint("clique"), 7) == std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(profile_prefix(builtin_blueprint("rado-window:4"), 4) == std::vector<long>{1, 1, 2, 3, 1});
    CHECK(profile_prefix(builtin_blueprint("matching-window:3"), 6) ==
          std::vector<long>{1, 1, 2, 2, 2, 1, 1});
    for (int k = 1; k <= 4; ++k) {
        std::vector<long> phi = profile_prefix(builtin_blueprint("k-cliques:" + std::to_string(k)), 9);
        for (int n = 0; n <= 9; ++n) CHECK(phi[n] == partitions_at_most(n, k));
    }
}

TEST_CASE("profiles by composition types match window subset counting") {
    for (const char* name : {"clique-plus-coclique", "c3-chains", "k-cliques:2"})
        for (int n = 0; n <= 4; ++n) {
            Blueprint b = builtin_blueprint(name);
            CHECK(profile(b, n) == profile_of_finite(window(b, std::max(n, 1)), n));
        }
}

TEST_CASE("shapes and the shape-preservation threshold") {
    CHECK(shape_of({0, 3, 1, 0, 2}) == Shape{3, 2, 1});
    CHECK(shape_of({0, 0}) == Shape{});
    CHECK(shape_preservation_threshold(builtin_blueprint("clique-plus-coclique"), 10) == 1);
    CHECK(shape_preservation_threshold(builtin_blueprint("c3-chains"), 10) == 1);
}

TEST_CASE("template automorphisms") {
    // the two infinite blocks of the k-cliques template are interchangeable
    CHECK(template_automorphisms(builtin_blueprint("k-cliques:2")).size() == 2);
    // the wheel template is rigid
    CHECK(template_automorphisms(builtin_blueprint("wheel-plus-coclique")).size() == 1);
}
