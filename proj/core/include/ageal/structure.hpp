#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ageal/errors.hpp"
#include "ageal/smallrng.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

// One relation symbol.  Only arities 1 and 2 are supported; that covers
// marked graphs, digraphs, tournaments and ordered chains, which is the whole
// scope of this toolkit.
struct RelationSpec {
    std::string name;
    int arity = 2;
    bool symmetric = false;    // meaningful for arity 2 only
    bool irreflexive = true;   // arity 2: loops forbidden

    friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

struct Signature {
    std::vector<RelationSpec> relations;

    // throws input_error on duplicate names, bad arity, symmetric unary, ...
    void validate() const;

    int index_of(const std::string& name) const;  // -1 if absent
    int arity(int rel) const { return relations.at(rel).arity; }
    int size() const { return static_cast<int>(relations.size()); }

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::shared_ptr<const Signature> make_signature(std::vector<RelationSpec> relations);

// ---------------------------------------------------------------------------
// Finite structures
// ---------------------------------------------------------------------------

// A finite relational structure on elements 0..size-1 over a fixed signature.
// Immutable in spirit: mutate only while building (add_tuple), then treat as
// a value.  Element count is capped at 64 so rows fit in one word; everything
// downstream (canonical forms, exhaustive decompositions) is far below that.
class FiniteStructure {
public:
    static constexpr int max_size = 64;

    FiniteStructure(std::shared_ptr<const Signature> sig, int size);

    int size() const { return n_; }
    const Signature& signature() const { return *sig_; }
    const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }

    // tuple must match the relation's arity; symmetric relations are stored
    // closed under swap; throws input_error on range/loop violations
    void add_tuple(int rel, const std::vector<int>& tuple);
    void add_unary(int rel, int v);
    void add_pair(int rel, int u, int v);

    bool has_unary(int rel, int v) const { return (unary_[rel] >> v) & 1u; }
    bool has_pair(int rel, int u, int v) const { return (rows_[rel][u] >> v) & 1u; }

    // raw bit rows, used by the canonicaliser and the exhaustive routines;
    // bit v of row(rel)[u] says (u,v) is in the relation
    const std::vector<std::uint64_t>& rows(int rel) const { return rows_[rel]; }
    std::uint64_t unary_mask(int rel) const { return unary_[rel]; }

    // sorted tuple list as written to JSON; symmetric pairs appear once (u<v)
    std::vector<std::vector<int>> tuples(int rel) const;
    long tuple_count(int rel) const;

    // substructure induced on the set bits of mask, labels renumbered
    // order-preservingly
    FiniteStructure induced(std::uint64_t mask) const;
    FiniteStructure induced(const std::vector<int>& elements) const;

    // image under the bijection old -> perm[old]
    FiniteStructure relabelled(const std::vector<int>& perm) const;

    // labelled equality over an identical signature
    friend bool operator==(const FiniteStructure& a, const FiniteStructure& b);

private:
    std::shared_ptr<const Signature> sig_;
    int n_;
    std::vector<std::uint64_t> unary_;               // per relation (0 for binary slots)
    std::vector<std::vector<std::uint64_t>> rows_;   // per relation (empty for unary slots)
};

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

// Opaque bytes identifying the isomorphism class of a structure within its
// signature.  Two structures over equal signatures are isomorphic iff their
// forms compare equal.  The total order on forms is plain lexicographic byte
// order; encoding: [size][per relation: unary bitmask | row-major adjacency
// bits of the canonically relabelled structure, packed little-endian].
struct CanonicalForm {
    std::string bytes;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// deterministic exhaustive refinement/backtracking search; exact for any
// input, intended for sizes up to ~16 (unstructured) and larger blow-ups
// whose refinement collapses quickly
CanonicalForm canonical_form(const FiniteStructure& s);

// the relabelling old -> new realising the canonical form
std::vector<int> canonical_labelling(const FiniteStructure& s);

// packed 64-bit canonical form; requires one binary relation, no unary
// relations and size <= 8 (used by the exhaustive enumerations)
std::uint64_t canonical_code64(const FiniteStructure& s);

bool are_isomorphic(const FiniteStructure& a, const FiniteStructure& b);

// number of isomorphism classes of n-element induced substructures
long profile_of_finite(const FiniteStructure& s, int n);

// ---------------------------------------------------------------------------
// Unlabelled enumeration
// ---------------------------------------------------------------------------

enum class StructureKind { graph, digraph, tournament };

std::shared_ptr<const Signature> kind_signature(StructureKind kind);

inline int default_enumeration_cap(StructureKind kind) {
    return kind == StructureKind::digraph ? 6 : 7;
}

// all isomorphism classes of the given size, one representative each,
// generated by vertex augmentation with canonical deduplication; results are
// sorted by canonical form
std::vector<FiniteStructure> enumerate_unlabelled_structures(int n, StructureKind kind,
                                                             int cap = -1);
std::vector<CanonicalForm> enumerate_unlabelled(int n, StructureKind kind, int cap = -1);

// streaming variant: visits every class of size n exactly once without
// materialising the list (the size-6 digraph sweep has 1.5M classes)
void for_each_unlabelled(int n, StructureKind kind,
                         const std::function<void(const FiniteStructure&)>& visit,
                         int cap = -1);

FiniteStructure random_structure(StructureKind kind, int n, SplitMix64& rng);

}
