#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ageal/algebra.hpp"
#include "ageal/blueprint.hpp"
#include "ageal/polynomials.hpp"
#include "ageal/series.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Permutation groupoids: sets of partial injections of {1..k} closed under
// identity restrictions, inverse, restriction, and composition, and their
// invariant rings spanned by monomial orbit sums.
// ---------------------------------------------------------------------------

struct PartialInjection {
    // img[i] = image of point i, or -1 outside the domain (0-based; the JSON
    // encoding is 1-based)
    std::vector<int> img;

    int k() const { return static_cast<int>(img.size()); }
    std::uint32_t domain_mask() const;
    std::uint32_t image_mask() const;
    bool total() const { return domain_mask() == (std::uint32_t{1} << k()) - 1; }

    static PartialInjection identity(int k);
    static PartialInjection identity_on(int k, std::uint32_t mask);
    PartialInjection inverse() const;
    PartialInjection restricted(std::uint32_t mask) const;  // mask subset of the domain
    // this after other; defined only when im(other) = dom(this)
    PartialInjection after(const PartialInjection& other) const;

    // validates injectivity and range
    static PartialInjection from_map(int k, const std::vector<std::pair<int, int>>& pairs);

    friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;
};

struct PermutationGroupoid {
    int k = 0;
    std::vector<PartialInjection> elements;  // sorted, unique

    bool contains(const PartialInjection& f) const;
};

inline constexpr int groupoid_ground_cap = 6;

// least closed superset of the generators plus all identity restrictions
PermutationGroupoid close(int k, const std::vector<PartialInjection>& generators);
bool is_closed(const PermutationGroupoid& g);

struct MonomialOrbitBasis {
    int degree = 0;
    std::vector<std::vector<Monomial>> orbits;  // each orbit sorted, orbits sorted by least member
};

// monomials m, m' of degree n are identified when some element sigma with
// dom sigma containing supp(m) carries m to m'; orbits are the components
// of that relation
MonomialOrbitBasis orbit_basis(const PermutationGroupoid& g, int n);

SeriesPrefix hilbert_prefix(const PermutationGroupoid& g, int N);

// orbit count of the group generated by total permutations acting on
// degree-n monomials, computed both by direct orbit enumeration and by
// cycle-index averaging; the two must agree
long group_multiset_orbits(int k, const std::vector<PartialInjection>& generators, int n);

struct WreathRow {
    int degree = 0;
    long profile = 0;
    long orbits = 0;
};

struct WreathReport {
    bool ok = true;
    std::vector<WreathRow> rows;
};

// blueprint profile versus monomial-orbit counts of the matching group
WreathReport wreath_crosscheck(int k, const std::vector<PartialInjection>& group_generators, const Blueprint& b,
                               int N);

// named (group, blueprint) pairs realizing the same profile: trivial group
// with marked coclique blocks, S_k with k interchangeable cliques, C2 with
// two blocks joined by all cross edges
struct WreathPair {
    std::string name;
    int k = 0;
    std::vector<PartialInjection> group_generators;
    Blueprint blueprint;
};
std::vector<WreathPair> builtin_wreath_pairs();

// span dimension of products of orbit sums of degrees <= D against the orbit
// count, inside K[x_1..x_k]
GenerationReport generation_probe(const PermutationGroupoid& g, int D, int N);
// least D <= d_max with no gaps up to N; -1 if none
int minimal_generation_degree(const PermutationGroupoid& g, int N, int d_max);

}
