#include "ageal/structure.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ageal {

void Signature::validate() const {
    std::set<std::string> seen;
    for (const auto& r : relations) {
        if (r.name.empty())
            throw input_error("relation with empty name");
        if (!seen.insert(r.name).second)
            throw input_error("duplicate relation name: " + r.name);
        if (r.arity != 1 && r.arity != 2)
            throw input_error("relation " + r.name + ": arity must be 1 or 2");
        if (r.arity == 1 && r.symmetric)
            throw input_error("relation " + r.name + ": unary relations cannot be symmetric");
    }
}

int Signature::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (relations[i].name == name) return i;
    return -1;
}

std::shared_ptr<const Signature> make_signature(std::vector<RelationSpec> relations) {
    auto sig = std::make_shared<Signature>(Signature{std::move(relations)});
    sig->validate();
    return sig;
}

FiniteStructure::FiniteStructure(std::shared_ptr<const Signature> sig, int size)
    : sig_(std::move(sig)), n_(size) {
    if (!sig_) throw input_error("null signature");
    if (n_ < 0 || n_ > max_size)
        throw input_error("structure size out of range 0..64");
    unary_.assign(sig_->size(), 0);
    rows_.resize(sig_->size());
    for (int r = 0; r < sig_->size(); ++r)
        if (sig_->arity(r) == 2) rows_[r].assign(n_, 0);
}

void FiniteStructure::add_unary(int rel, int v) {
    const auto& spec = sig_->relations.at(rel);
    if (spec.arity != 1) throw input_error("relation " + spec.name + " is not unary");
    if (v < 0 || v >= n_) throw input_error("element out of range in " + spec.name);
    unary_[rel] |= 1ULL << v;
}

void FiniteStructure::add_pair(int rel, int u, int v) {
    const auto& spec = sig_->relations.at(rel);
    if (spec.arity != 2) throw input_error("relation " + spec.name + " is not binary");
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw input_error("element out of range in " + spec.name);
    if (u == v && spec.irreflexive)
        throw input_error("loop in irreflexive relation " + spec.name);
    rows_[rel][u] |= 1ULL << v;
    if (spec.symmetric) rows_[rel][v] |= 1ULL << u;
}

void FiniteStructure::add_tuple(int rel, const std::vector<int>& tuple) {
    const auto& spec = sig_->relations.at(rel);
    if (static_cast<int>(tuple.size()) != spec.arity)
        throw input_error("tuple arity mismatch in " + spec.name);
    if (spec.arity == 1)
        add_unary(rel, tuple[0]);
    else
        add_pair(rel, tuple[0], tuple[1]);
}

std::vector<std::vector<int>> FiniteStructure::tuples(int rel) const {
    const auto& spec = sig_->relations.at(rel);
    std::vector<std::vector<int>> out;
    if (spec.arity == 1) {
        for (int v = 0; v < n_; ++v)
            if (has_unary(rel, v)) out.push_back({v});
        return out;
    }
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            if (!has_pair(rel, u, v)) continue;
            if (spec.symmetric && v < u) continue;  // emit unordered pairs once
            out.push_back({u, v});
        }
    return out;
}

long FiniteStructure::tuple_count(int rel) const {
    const auto& spec = sig_->relations.at(rel);
    if (spec.arity == 1) return std::popcount(unary_[rel]);
    long c = 0;
    for (int u = 0; u < n_; ++u) c += std::popcount(rows_[rel][u]);
    if (spec.symmetric) {
        long diag = 0;
        for (int u = 0; u < n_; ++u) diag += (rows_[rel][u] >> u) & 1u;
        c = (c - diag) / 2 + diag;
    }
    return c;
}

FiniteStructure FiniteStructure::induced(std::uint64_t mask) const {
    int m = std::popcount(mask);
    FiniteStructure out(sig_, m);
    int newidx[max_size];
    int old_of[max_size];
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1u) {
            newidx[v] = k;
            old_of[k] = v;
            ++k;
        }
    for (int r = 0; r < sig_->size(); ++r) {
        if (sig_->arity(r) == 1) {
            for (int j = 0; j < m; ++j)
                if (has_unary(r, old_of[j])) out.unary_[r] |= 1ULL << j;
        } else {
            for (int j = 0; j < m; ++j) {
                std::uint64_t row = rows_[r][old_of[j]] & mask;
                std::uint64_t packed = 0;
                while (row) {
                    int v = std::countr_zero(row);
                    row &= row - 1;
                    packed |= 1ULL << newidx[v];
                }
                out.rows_[r][j] = packed;
            }
        }
    }
    return out;
}

FiniteStructure FiniteStructure::induced(const std::vector<int>& elements) const {
    std::uint64_t mask = 0;
    for (int v : elements) {
        if (v < 0 || v >= n_) throw input_error("induced: element out of range");
        mask |= 1ULL << v;
    }
    if (std::popcount(mask) != static_cast<int>(elements.size()))
        throw input_error("induced: repeated element");
    return induced(mask);
}

FiniteStructure FiniteStructure::relabelled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw input_error("relabelled: permutation size mismatch");
    std::uint64_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n_ || ((seen >> v) & 1u))
            throw input_error("relabelled: not a permutation");
        seen |= 1ULL << v;
    }
    FiniteStructure out(sig_, n_);
    for (int r = 0; r < sig_->size(); ++r) {
        if (sig_->arity(r) == 1) {
            for (int v = 0; v < n_; ++v)
                if (has_unary(r, v)) out.unary_[r] |= 1ULL << perm[v];
        } else {
            for (int u = 0; u < n_; ++u) {
                std::uint64_t row = rows_[r][u];
                std::uint64_t packed = 0;
                while (row) {
                    int v = std::countr_zero(row);
                    row &= row - 1;
                    packed |= 1ULL << perm[v];
                }
                out.rows_[r][perm[u]] = packed;
            }
        }
    }
    return out;
}

bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    if (a.n_ != b.n_) return false;
    if (a.sig_ != b.sig_ && !(*a.sig_ == *b.sig_)) return false;
    return a.unary_ == b.unary_ && a.rows_ == b.rows_;
}

bool are_isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
    if (a.size() != b.size()) return false;
    if (a.signature_ptr() != b.signature_ptr() && !(a.signature() == b.signature()))
        throw input_error("are_isomorphic: signature mismatch");
    for (int r = 0; r < a.signature().size(); ++r)
        if (a.tuple_count(r) != b.tuple_count(r)) return false;
    return canonical_form(a) == canonical_form(b);
}

long profile_of_finite(const FiniteStructure& s, int n) {
    if (n < 0) throw input_error("profile_of_finite: negative degree");
    if (n > s.size()) return 0;
    std::set<std::string> forms;
    // run over n-subsets of the elements as bitmasks in lexicographic order
    std::uint64_t mask = (n == 0) ? 0 : (~0ULL >> (64 - n));
    const std::uint64_t stop = (s.size() == 64) ? ~0ULL : (1ULL << s.size());
    if (n == 0) return 1;
    while (mask < stop) {
        forms.insert(canonical_form(s.induced(mask)).bytes);
        // Gosper's hack: next mask with the same popcount
        std::uint64_t c = mask & -mask;
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return static_cast<long>(forms.size());
}

FiniteStructure random_structure(StructureKind kind, int n, SplitMix64& rng) {
    FiniteStructure s(kind_signature(kind), n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (kind) {
                case StructureKind::graph:
                    if (rng.coin()) s.add_pair(0, u, v);
                    break;
                case StructureKind::digraph: {
                    std::uint64_t bits = rng.below(4);
                    if (bits & 1) s.add_pair(0, u, v);
                    if (bits & 2) s.add_pair(0, v, u);
                    break;
                }
                case StructureKind::tournament:
                    if (rng.coin())
                        s.add_pair(0, u, v);
                    else
                        s.add_pair(0, v, u);
                    break;
            }
        }
    return s;
}

}
