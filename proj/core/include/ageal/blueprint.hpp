#pragma once

#include <string>
#include <vector>

#include "ageal/structure.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Blueprints: finite descriptions of infinite structures with finitely many
// monomorphic blocks.  A blueprint is a template structure on block indices
// plus one cardinality/inner-kind spec per block; substituting concrete
// counts for the blocks (a composition vector) blows the template up into a
// finite structure.
// ---------------------------------------------------------------------------

enum class InnerKind { empty, complete, chain };

struct BlockSpec {
    static constexpr long omega = -1;

    long cardinality = omega;  // omega or a finite count >= 0
    InnerKind inner = InnerKind::empty;

    bool is_infinite() const { return cardinality == omega; }

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

// per-block element counts; entry x is the number of elements drawn from
// block x
using CompositionVector = std::vector<long>;

// multiset of nonzero entries of a composition vector, descending
using Shape = std::vector<long>;

class Blueprint {
public:
    // the template signature must contain exactly one binary relation (the
    // adjacency relation inner kinds populate) plus any number of unary
    // marks; the binary relation must be irreflexive and chains require it
    // to be non-symmetric
    Blueprint(FiniteStructure template_structure, std::vector<BlockSpec> blocks);

    const FiniteStructure& template_structure() const { return tmpl_; }
    const std::vector<BlockSpec>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int adjacency_relation() const { return adj_rel_; }

    std::vector<int> infinite_blocks() const;
    bool has_infinite_block() const { return !infinite_blocks().empty(); }
    long finite_total() const;  // sum of the finite cardinalities

    // throws input_error unless v has one nonnegative entry per block and
    // respects finite cardinalities
    void validate_vector(const CompositionVector& v) const;

    // blueprint on a subset of the block indices (sorted), template induced
    Blueprint restricted(const std::vector<int>& indices) const;

    friend bool operator==(const Blueprint&, const Blueprint&);

private:
    FiniteStructure tmpl_;
    std::vector<BlockSpec> blocks_;
    int adj_rel_;
};

// substitute counts for blocks; elements are laid out block by block in
// index order, so block x occupies a contiguous label range
FiniteStructure blow_up(const Blueprint& b, const CompositionVector& v);

// first label of each block in the blow_up of v (one extra entry = total)
std::vector<long> block_offsets(const CompositionVector& v);

CanonicalForm iso_type(const Blueprint& b, const CompositionVector& v);

// every infinite block truncated to t elements, finite blocks kept whole
FiniteStructure window(const Blueprint& b, int t);
CompositionVector window_vector(const Blueprint& b, int t);

// capacity-respecting composition vectors of total n, lexicographic order
std::vector<CompositionVector> composition_vectors(const Blueprint& b, int n);

// number of isomorphism types among degree-n substructures of the infinite
// structure the blueprint denotes; exact because types depend only on the
// composition vector
long profile(const Blueprint& b, int n);
std::vector<long> profile_prefix(const Blueprint& b, int N);

Shape shape_of(const CompositionVector& v);

// least d <= N such that among capacity vectors with every infinite entry
// >= d, finite blocks full and total <= N, equal iso types force equal
// shapes; -1 when no d <= N works
int shape_preservation_threshold(const Blueprint& b, int N);

// block-respecting automorphisms of the template (brute force; templates are
// tiny)
std::vector<std::vector<int>> template_automorphisms(const Blueprint& b);

}
