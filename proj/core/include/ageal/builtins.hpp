#pragma once

#include <string>
#include <vector>

#include "ageal/blueprint.hpp"
#include "ageal/groupoid.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Named example library.  Tests, docs and the CLI all pull the same objects
// from here, so the three never drift apart.
// ---------------------------------------------------------------------------

// Blueprint names:
//   "clique"                one block of omega mutually adjacent vertices
//   "coclique"              one block of omega pairwise non-adjacent vertices
//   "chain"                 one omega block carrying a linear order (arcs)
//   "k-cliques:k"           k interchangeable omega clique blocks, no cross edges
//   "clique-plus-coclique"  an omega clique next to an omega coclique
//   "wheel-plus-coclique"   a hub joined to an omega coclique, plus a second
//                           omega coclique with no other edges
//   "c3-chains"             three omega chains with cross arcs in a 3-cycle
//   "matching-window:t"     t disjoint edges (finite)
//   "path-window:t"         the t-vertex path (finite)
//   "rado-window:t"         vertices 0..t-1, i<j adjacent when bit i of j is
//                           set (finite)
// throws input_error on unknown names or bad parameters
Blueprint builtin_blueprint(const std::string& name);

// library entries with at least one infinite block, instantiated at standard
// parameters; the cross-cutting laws (e1 ranks, quasi-polynomial degree)
// quantify over exactly these
std::vector<std::string> infinite_builtin_names();
// every entry at standard parameters, finite windows included
std::vector<std::string> all_builtin_names();

// Groupoid names:
//   "noncm"      closure of the single local bijection 1->2 on ground set {1,2,3}
//   "trivial:k"  identity restrictions only
//   "qsym:k"     all increasing partial injections of {1..k}
//   "sym:k"      all partial injections of {1..k}
// throws input_error on unknown names; cap_exceeded past the ground cap
PermutationGroupoid builtin_groupoid(const std::string& name);
std::vector<std::string> builtin_groupoid_names();

}
