#include "ageal/structure.hpp"

#include <algorithm>
#include <unordered_set>

// Unlabelled enumeration by vertex augmentation: every isomorphism class on
// m+1 elements restricts to one on m elements, so extending every m-class by
// one new vertex in every possible way and deduplicating canonically visits
// each class exactly once.  Class counts stay small enough to materialise for
// every level except the last, which is streamed.

namespace ageal {

namespace {

FiniteStructure extend(const FiniteStructure& parent, StructureKind kind, std::uint64_t way) {
    const int m = parent.size();
    FiniteStructure child(parent.signature_ptr(), m + 1);
    for (int u = 0; u < m; ++u) {
        std::uint64_t row = parent.rows(0)[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (parent.signature().relations[0].symmetric && v < u) continue;
            child.add_pair(0, u, v);
        }
    }
    switch (kind) {
        case StructureKind::graph:
            for (int v = 0; v < m; ++v)
                if ((way >> v) & 1u) child.add_pair(0, m, v);
            break;
        case StructureKind::digraph:
            for (int v = 0; v < m; ++v) {
                switch (way % 4) {
                    case 1: child.add_pair(0, m, v); break;
                    case 2: child.add_pair(0, v, m); break;
                    case 3:
                        child.add_pair(0, m, v);
                        child.add_pair(0, v, m);
                        break;
                    default: break;
                }
                way /= 4;
            }
            break;
        case StructureKind::tournament:
            for (int v = 0; v < m; ++v) {
                if ((way >> v) & 1u)
                    child.add_pair(0, m, v);
                else
                    child.add_pair(0, v, m);
            }
            break;
    }
    return child;
}

std::uint64_t extension_count(StructureKind kind, int m) {
    if (kind == StructureKind::digraph) return 1ULL << (2 * m);
    return 1ULL << m;
}

void check_cap(int n, StructureKind kind, int cap) {
    if (cap < 0) cap = default_enumeration_cap(kind);
    if (n < 0) throw input_error("enumeration size must be nonnegative");
    if (n > cap) throw cap_exceeded("unlabelled enumeration capped at size " + std::to_string(cap));
}

std::vector<FiniteStructure> level(int n, StructureKind kind) {
    std::vector<FiniteStructure> cur;
    cur.emplace_back(kind_signature(kind), 0);
    for (int m = 0; m < n; ++m) {
        std::vector<FiniteStructure> next;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& parent : cur)
            for (std::uint64_t way = 0; way < extension_count(kind, m); ++way) {
                FiniteStructure child = extend(parent, kind, way);
                if (seen.insert(canonical_code64(child)).second) next.push_back(std::move(child));
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::shared_ptr<const Signature> kind_signature(StructureKind kind) {
    static const auto graph_sig = make_signature({{"edge", 2, true, true}});
    static const auto arc_sig = make_signature({{"arc", 2, false, true}});
    return kind == StructureKind::graph ? graph_sig : arc_sig;
}

std::vector<FiniteStructure> enumerate_unlabelled_structures(int n, StructureKind kind, int cap) {
    check_cap(n, kind, cap);
    auto out = level(n, kind);
    std::sort(out.begin(), out.end(), [](const FiniteStructure& a, const FiniteStructure& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

std::vector<CanonicalForm> enumerate_unlabelled(int n, StructureKind kind, int cap) {
    check_cap(n, kind, cap);
    auto classes = level(n, kind);
    std::vector<CanonicalForm> forms;
    forms.reserve(classes.size());
    for (const auto& s : classes) forms.push_back(canonical_form(s));
    std::sort(forms.begin(), forms.end());
    return forms;
}

void for_each_unlabelled(int n, StructureKind kind,
                         const std::function<void(const FiniteStructure&)>& visit, int cap) {
    check_cap(n, kind, cap);
    if (n == 0) {
        visit(FiniteStructure(kind_signature(kind), 0));
        return;
    }
    auto parents = level(n - 1, kind);
    std::unordered_set<std::uint64_t> seen;
    for (const auto& parent : parents)
        for (std::uint64_t way = 0; way < extension_count(kind, n - 1); ++way) {
            FiniteStructure child = extend(parent, kind, way);
            if (seen.insert(canonical_code64(child)).second) visit(child);
        }
}

}
