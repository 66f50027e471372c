#include "ageal/blueprint.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "ageal/errors.hpp"

namespace ageal {

namespace {

int find_adjacency_relation(const FiniteStructure& tmpl) {
    const Signature& sig = tmpl.signature();
    int adj = -1;
    for (int r = 0; r < sig.size(); ++r) {
        if (sig.relations[r].arity != 2) continue;
        if (adj >= 0) throw input_error("blueprint template needs exactly one binary relation, got several");
        adj = r;
    }
    if (adj < 0) throw input_error("blueprint template needs exactly one binary relation");
    return adj;
}

}  // namespace

Blueprint::Blueprint(FiniteStructure template_structure, std::vector<BlockSpec> blocks)
    : tmpl_(std::move(template_structure)), blocks_(std::move(blocks)), adj_rel_(find_adjacency_relation(tmpl_)) {
    if (static_cast<int>(blocks_.size()) != tmpl_.size())
        throw input_error("blueprint needs one block spec per template element");
    if (tmpl_.size() == 0) throw input_error("blueprint template must be nonempty");
    const RelationSpec& adj = tmpl_.signature().relations[adj_rel_];
    if (!adj.irreflexive) throw input_error("blueprint adjacency relation must be irreflexive");
    for (const BlockSpec& bs : blocks_) {
        if (!bs.is_infinite() && bs.cardinality < 0)
            throw input_error("block cardinality must be omega or >= 0");
        if (bs.inner == InnerKind::chain && adj.symmetric)
            throw input_error("chain blocks need a non-symmetric adjacency relation");
    }
}

std::vector<int> Blueprint::infinite_blocks() const {
    std::vector<int> out;
    for (int x = 0; x < block_count(); ++x)
        if (blocks_[x].is_infinite()) out.push_back(x);
    return out;
}

long Blueprint::finite_total() const {
    long total = 0;
    for (const BlockSpec& bs : blocks_)
        if (!bs.is_infinite()) total += bs.cardinality;
    return total;
}

void Blueprint::validate_vector(const CompositionVector& v) const {
    if (static_cast<int>(v.size()) != block_count())
        throw input_error("composition vector length must equal the block count");
    for (int x = 0; x < block_count(); ++x) {
        if (v[x] < 0) throw input_error("composition vector entries must be nonnegative");
        if (!blocks_[x].is_infinite() && v[x] > blocks_[x].cardinality)
            throw input_error("composition vector exceeds a finite block cardinality");
    }
}

Blueprint Blueprint::restricted(const std::vector<int>& indices) const {
    std::uint64_t mask = 0;
    std::vector<BlockSpec> sub;
    for (int x : indices) {
        if (x < 0 || x >= block_count()) throw input_error("block index out of range");
        if (mask & (std::uint64_t{1} << x)) throw input_error("duplicate block index");
        mask |= std::uint64_t{1} << x;
        sub.push_back(blocks_[x]);
    }
    if (!std::is_sorted(indices.begin(), indices.end()))
        throw input_error("block indices must be sorted");
    return Blueprint(tmpl_.induced(mask), std::move(sub));
}

bool operator==(const Blueprint& a, const Blueprint& b) {
    return a.tmpl_ == b.tmpl_ && a.blocks_ == b.blocks_;
}

std::vector<long> block_offsets(const CompositionVector& v) {
    std::vector<long> off(v.size() + 1, 0);
    for (std::size_t x = 0; x < v.size(); ++x) off[x + 1] = off[x] + v[x];
    return off;
}

FiniteStructure blow_up(const Blueprint& b, const CompositionVector& v) {
    b.validate_vector(v);
    std::vector<long> off = block_offsets(v);
    long total = off.back();
    if (total > FiniteStructure::max_size) throw cap_exceeded("blow-up larger than the supported structure size");

    const FiniteStructure& tmpl = b.template_structure();
    const Signature& sig = tmpl.signature();
    FiniteStructure s(tmpl.signature_ptr(), static_cast<int>(total));
    int adj = b.adjacency_relation();

    for (int r = 0; r < sig.size(); ++r) {
        if (sig.relations[r].arity != 1) continue;
        for (int x = 0; x < b.block_count(); ++x)
            if (tmpl.has_unary(r, x))
                for (long i = off[x]; i < off[x + 1]; ++i) s.add_unary(r, static_cast<int>(i));
    }

    for (const std::vector<int>& tup : tmpl.tuples(adj))
        for (long i = off[tup[0]]; i < off[tup[0] + 1]; ++i)
            for (long j = off[tup[1]]; j < off[tup[1] + 1]; ++j)
                s.add_pair(adj, static_cast<int>(i), static_cast<int>(j));

    bool sym = sig.relations[adj].symmetric;
    for (int x = 0; x < b.block_count(); ++x) {
        switch (b.blocks()[x].inner) {
            case InnerKind::empty: break;
            case InnerKind::complete:
                for (long i = off[x]; i < off[x + 1]; ++i)
                    for (long j = i + 1; j < off[x + 1]; ++j) {
                        s.add_pair(adj, static_cast<int>(i), static_cast<int>(j));
                        if (!sym) s.add_pair(adj, static_cast<int>(j), static_cast<int>(i));
                    }
                break;
            case InnerKind::chain:
                for (long i = off[x]; i < off[x + 1]; ++i)
                    for (long j = i + 1; j < off[x + 1]; ++j) s.add_pair(adj, static_cast<int>(i), static_cast<int>(j));
                break;
        }
    }
    return s;
}

CanonicalForm iso_type(const Blueprint& b, const CompositionVector& v) { return canonical_form(blow_up(b, v)); }

CompositionVector window_vector(const Blueprint& b, int t) {
    if (t < 0) throw input_error("window size must be nonnegative");
    CompositionVector v(b.block_count());
    for (int x = 0; x < b.block_count(); ++x)
        v[x] = b.blocks()[x].is_infinite() ? t : b.blocks()[x].cardinality;
    return v;
}

FiniteStructure window(const Blueprint& b, int t) { return blow_up(b, window_vector(b, t)); }

namespace {

void gen_vectors(const Blueprint& b, int idx, long rem, CompositionVector& cur,
                 std::vector<CompositionVector>& out) {
    if (idx == b.block_count()) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    long hi = rem;
    if (!b.blocks()[idx].is_infinite()) hi = std::min(hi, b.blocks()[idx].cardinality);
    for (long c = 0; c <= hi; ++c) {
        cur[idx] = c;
        gen_vectors(b, idx + 1, rem - c, cur, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<CompositionVector> composition_vectors(const Blueprint& b, int n) {
    if (n < 0) throw input_error("substructure size must be nonnegative");
    std::vector<CompositionVector> out;
    CompositionVector cur(b.block_count(), 0);
    gen_vectors(b, 0, n, cur, out);
    return out;
}

long profile(const Blueprint& b, int n) {
    std::set<std::string> forms;
    for (const CompositionVector& v : composition_vectors(b, n)) forms.insert(iso_type(b, v).bytes);
    return static_cast<long>(forms.size());
}

std::vector<long> profile_prefix(const Blueprint& b, int N) {
    if (N < 0) throw input_error("prefix length must be nonnegative");
    std::vector<long> out;
    out.reserve(N + 1);
    for (int n = 0; n <= N; ++n) out.push_back(profile(b, n));
    return out;
}

Shape shape_of(const CompositionVector& v) {
    Shape s;
    for (long c : v)
        if (c > 0) s.push_back(c);
    std::sort(s.rbegin(), s.rend());
    return s;
}

int shape_preservation_threshold(const Blueprint& b, int N) {
    if (N < 0) throw input_error("bound must be nonnegative");
    if (b.finite_total() > N) throw input_error("bound too small to include the finite blocks");
    std::vector<int> inf = b.infinite_blocks();
    for (int d = 0; d <= N; ++d) {
        // vectors: finite blocks full, infinite entries >= d, total <= N
        long base = b.finite_total() + d * static_cast<long>(inf.size());
        if (base > N) return -1;  // qualifying set empty from here on
        bool ok = true;
        std::map<std::string, Shape> shape_of_form;
        CompositionVector v(b.block_count());
        for (int x = 0; x < b.block_count(); ++x)
            v[x] = b.blocks()[x].is_infinite() ? d : b.blocks()[x].cardinality;
        // enumerate extra elements on the infinite blocks
        long budget = N - base;
        std::vector<long> extra(inf.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < inf.size(); ++i) v[inf[i]] = d + extra[i];
            auto [it, fresh] = shape_of_form.try_emplace(iso_type(b, v).bytes, shape_of(v));
            if (!fresh && it->second != shape_of(v)) {
                ok = false;
                break;
            }
            // next multi-index with sum <= budget
            std::size_t i = 0;
            long used = 0;
            for (long e : extra) used += e;
            while (i < extra.size()) {
                if (used < budget) {
                    ++extra[i];
                    break;
                }
                used -= extra[i];
                extra[i] = 0;
                ++i;
            }
            if (i == extra.size()) break;
        }
        if (ok) return d;
    }
    return -1;
}

std::vector<std::vector<int>> template_automorphisms(const Blueprint& b) {
    int m = b.block_count();
    if (m > 10) throw cap_exceeded("template too large for automorphism enumeration");
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = b.blocks()[perm[i]] == b.blocks()[i];
        if (ok && b.template_structure().relabelled(perm) == b.template_structure()) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}
