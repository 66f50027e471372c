#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ageal/blueprint.hpp"
#include "ageal/structure.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Monomorphic parts and minimal monomorphic decompositions.
//
// A part B of a finite structure is monomorphic when, for every outside set
// C and every size j, all induced substructures on C together with j
// elements of B are isomorphic.  The minimal decomposition is computed two
// ways: directly from the definition, and through the pairwise relation
// x ~ y iff {x,y} is a monomorphic part, whose classes are exactly the
// minimal blocks.
// ---------------------------------------------------------------------------

// isomorphism types of all induced substructures of one structure, indexed
// by element mask; lets part tests share the 2^n canonicalisation work
class SubsetForms {
public:
    explicit SubsetForms(const FiniteStructure& s);

    // iso-type equality of the induced substructures on two masks of equal
    // popcount
    bool same(std::uint64_t a, std::uint64_t b) const {
        if (compact_) return codes_[a] == codes_[b];
        return forms_[a] == forms_[b];
    }

    int size() const { return n_; }

private:
    int n_;
    bool compact_;  // single binary relation, no unary marks, n <= 8
    std::vector<std::uint64_t> codes_;
    std::vector<std::string> forms_;
};

// blocks sorted internally and by least element
using Partition = std::vector<std::vector<int>>;

bool is_monomorphic_part(const FiniteStructure& s, std::uint64_t part_mask);
bool is_monomorphic_part(const FiniteStructure& s, const std::vector<int>& part);
bool is_monomorphic_part(const SubsetForms& table, std::uint64_t part_mask);

// test every subset, keep the monomorphic ones, and read the minimal blocks
// off as the unions of parts through each element
Partition minimal_decomposition_bruteforce(const FiniteStructure& s, int cap = 10);
Partition minimal_decomposition_bruteforce(const FiniteStructure& s, const SubsetForms& table, int cap = 10);

// classes of the pairwise relation; transitivity is verified, not assumed
Partition minimal_decomposition_pairwise(const FiniteStructure& s, int cap = 12);
Partition minimal_decomposition_pairwise(const FiniteStructure& s, const SubsetForms& table, int cap = 12);

struct DecompositionReport {
    Partition blocks;  // partition of the template indices
    int dimension;     // number of blocks containing an infinite index
    bool stabilized;   // last two windows induced the same partition
    int window;        // largest window used
};

// decompose windows t = 2..t_max and pull the partitions back to template
// indices; stabilized means the top two windows agree
DecompositionReport decomposition_of_blueprint(const Blueprint& b, int t_max = 5);

// every restriction to a nonempty subset of the infinite blocks has that
// subset as its own minimal decomposition; equivalent to finite generation
// of the age algebra
bool is_hereditary_minimal(const Blueprint& b, int t_max = 5);
bool is_finitely_generated(const Blueprint& b, int t_max = 5);

struct KernelReport {
    std::vector<int> elements;         // labels in window(b, window) whose removal shrinks the age
    std::vector<int> template_blocks;  // finite block indices all of whose elements are kernel
    int window;                        // window the labels refer to
    int bound;                         // ages compared for sizes 0..bound
    bool stabilized = false;           // the window decomposition stabilized below t_max
};

// a finite-block element is in the kernel when the age of the window minus
// that element misses some iso type of size <= bound present in the age of
// the window; infinite-block elements never are
KernelReport kernel_elements(const Blueprint& b, int t_max = 5, int n_max = 6);

struct TournamentPartScan {
    long structures = 0;   // tournament classes visited
    long parts = 0;        // monomorphic parts of size >= 4 seen
    long union_checks = 0; // pairs of such parts whose union was tested
    bool ok = true;
    std::string counterexample;  // set when !ok
};

// exhaustively confirm, on all tournaments with <= n_max elements, that
// monomorphic parts of size >= 4 are transitive and that unions of two such
// parts are transitive
TournamentPartScan tournament_remark_check(int n_max);

struct TournamentFgReport {
    bool finitely_generated;
    std::string reason;
    DecompositionReport decomposition;
};

// for tournament blueprints finite generation is decided by the number of
// infinite minimal blocks alone
TournamentFgReport tournament_finite_generation(const Blueprint& b, int t_max = 5);

}
