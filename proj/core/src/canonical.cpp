#include "ageal/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <vector>

// Canonical labelling by ordered-partition refinement plus backtracking.
//
// The search refines vertex colours with neighbour-count signatures until
// stable, then individualises one vertex per "twin class" of the first
// non-singleton cell and recurses.  Two cell-mates are twins when their
// transposition is an automorphism; branches of twins produce identical leaf
// encodings, so exploring one representative keeps the minimum intact.  Every
// leaf yields a discrete colouring, i.e. a labelling; the canonical form is
// the minimum word encoding over all visited leaves.
//
// Unary relations and loops never enter the refinement keys; they are still
// separated by the twin test and by the leaf encoding, so they cost time,
// never correctness.  Initial colours fold them in to keep the tree small.

namespace ageal {
namespace {

constexpr int MAXN = FiniteStructure::max_size;
constexpr int MAXBIN = 8;
constexpr int MAXUN = 16;

struct Workspace {
    int n = 0;
    int nbin = 0;
    int nun = 0;
    bool sym[MAXBIN];
    std::uint64_t rows[MAXBIN][MAXN];
    std::uint64_t cols[MAXBIN][MAXN];
    std::uint64_t un[MAXUN];
    // signature order: arity and slot into the arrays above
    int nrel = 0;
    int rel_arity[MAXBIN + MAXUN];
    int rel_slot[MAXBIN + MAXUN];

    std::vector<std::uint8_t> keys;  // n * stride bytes, all values < 256
    std::uint64_t cellmask[MAXN];
    int order[MAXN];

    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> cand;
    int best_perm[MAXN];
    bool have_best = false;
    long leaf_budget = 0;

    void load(const FiniteStructure& s);
    void initial_colours(int* colour);
    void refine(int* colour);
    void search(const int* colour);
    bool twins(int u, int v) const;
    void encode_leaf(const int* perm);
    void run(const FiniteStructure& s);
};

void Workspace::load(const FiniteStructure& s) {
    n = s.size();
    nbin = nun = nrel = 0;
    const Signature& sig = s.signature();
    for (int r = 0; r < sig.size(); ++r) {
        if (sig.arity(r) == 1) {
            if (nun == MAXUN) throw cap_exceeded("canonical_form: too many unary relations");
            un[nun] = s.unary_mask(r);
            rel_arity[nrel] = 1;
            rel_slot[nrel++] = nun++;
        } else {
            if (nbin == MAXBIN) throw cap_exceeded("canonical_form: too many binary relations");
            sym[nbin] = sig.relations[r].symmetric;
            const auto& rr = s.rows(r);
            for (int v = 0; v < n; ++v) rows[nbin][v] = rr[v];
            if (!sym[nbin]) {
                for (int v = 0; v < n; ++v) cols[nbin][v] = 0;
                for (int u = 0; u < n; ++u) {
                    std::uint64_t row = rr[u];
                    while (row) {
                        int v = std::countr_zero(row);
                        row &= row - 1;
                        cols[nbin][v] |= 1ULL << u;
                    }
                }
            }
            rel_arity[nrel] = 2;
            rel_slot[nrel++] = nbin++;
        }
    }
}

// sort vertices by an invariant key and turn equal keys into equal colours
static void assign_colours_by_key(const std::vector<std::uint8_t>& keys, int stride, int n,
                                  int* order, int* colour) {
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order, order + n, [&](int a, int b) {
        return std::memcmp(keys.data() + static_cast<size_t>(a) * stride,
                           keys.data() + static_cast<size_t>(b) * stride, stride) < 0;
    });
    int c = 0;
    colour[order[0]] = 0;
    for (int i = 1; i < n; ++i) {
        if (std::memcmp(keys.data() + static_cast<size_t>(order[i - 1]) * stride,
                        keys.data() + static_cast<size_t>(order[i]) * stride, stride) != 0)
            ++c;
        colour[order[i]] = c;
    }
}

void Workspace::initial_colours(int* colour) {
    // key: unary membership, then per binary relation loop bit, outdeg, indeg
    const int stride = nun + 3 * nbin;
    if (stride == 0 || n == 0) {
        for (int v = 0; v < n; ++v) colour[v] = 0;
        return;
    }
    keys.assign(static_cast<size_t>(n) * stride, 0);
    for (int v = 0; v < n; ++v) {
        std::uint8_t* k = keys.data() + static_cast<size_t>(v) * stride;
        for (int r = 0; r < nun; ++r) *k++ = static_cast<std::uint8_t>((un[r] >> v) & 1u);
        for (int b = 0; b < nbin; ++b) {
            *k++ = static_cast<std::uint8_t>((rows[b][v] >> v) & 1u);
            *k++ = static_cast<std::uint8_t>(std::popcount(rows[b][v]));
            *k++ = static_cast<std::uint8_t>(sym[b] ? 0 : std::popcount(cols[b][v]));
        }
    }
    assign_colours_by_key(keys, stride, n, order, colour);
}

void Workspace::refine(int* colour) {
    if (n == 0) return;
    for (;;) {
        int ncolours = 0;
        for (int v = 0; v < n; ++v) ncolours = std::max(ncolours, colour[v] + 1);
        if (ncolours == n) return;
        for (int c = 0; c < ncolours; ++c) cellmask[c] = 0;
        for (int v = 0; v < n; ++v) cellmask[colour[v]] |= 1ULL << v;
        int dirs = 0;
        for (int b = 0; b < nbin; ++b) dirs += sym[b] ? 1 : 2;
        // all entries stay < 256: colours < n <= 64, counts <= 64
        const int stride = 1 + dirs * ncolours;
        keys.assign(static_cast<size_t>(n) * stride, 0);
        for (int v = 0; v < n; ++v) {
            std::uint8_t* k = keys.data() + static_cast<size_t>(v) * stride;
            *k++ = static_cast<std::uint8_t>(colour[v]);
            for (int b = 0; b < nbin; ++b) {
                for (int c = 0; c < ncolours; ++c)
                    *k++ = static_cast<std::uint8_t>(std::popcount(rows[b][v] & cellmask[c]));
                if (!sym[b])
                    for (int c = 0; c < ncolours; ++c)
                        *k++ = static_cast<std::uint8_t>(std::popcount(cols[b][v] & cellmask[c]));
            }
        }
        int newcolour[MAXN];
        assign_colours_by_key(keys, stride, n, order, newcolour);
        int newn = 0;
        for (int v = 0; v < n; ++v) newn = std::max(newn, newcolour[v] + 1);
        std::memcpy(colour, newcolour, static_cast<size_t>(n) * sizeof(int));
        if (newn == ncolours) return;
    }
}

bool Workspace::twins(int u, int v) const {
    const std::uint64_t uv = (1ULL << u) | (1ULL << v);
    for (int r = 0; r < nun; ++r)
        if (((un[r] >> u) & 1u) != ((un[r] >> v) & 1u)) return false;
    for (int b = 0; b < nbin; ++b) {
        if (((rows[b][u] ^ rows[b][v]) & ~uv) != 0) return false;
        if (!sym[b] && ((cols[b][u] ^ cols[b][v]) & ~uv) != 0) return false;
        if (((rows[b][u] >> v) & 1u) != ((rows[b][v] >> u) & 1u)) return false;
        if (((rows[b][u] >> u) & 1u) != ((rows[b][v] >> v) & 1u)) return false;
    }
    return true;
}

void Workspace::encode_leaf(const int* perm) {
    if (--leaf_budget < 0)
        throw cap_exceeded("canonical_form: search budget exhausted");
    cand.clear();
    for (int r = 0; r < nrel; ++r) {
        if (rel_arity[r] == 1) {
            std::uint64_t m = un[rel_slot[r]], p = 0;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                p |= 1ULL << perm[v];
            }
            cand.push_back(p);
        } else {
            std::uint64_t newrows[MAXN];
            const std::uint64_t* rr = rows[rel_slot[r]];
            for (int u = 0; u < n; ++u) {
                std::uint64_t row = rr[u], p = 0;
                while (row) {
                    int v = std::countr_zero(row);
                    row &= row - 1;
                    p |= 1ULL << perm[v];
                }
                newrows[perm[u]] = p;
            }
            cand.insert(cand.end(), newrows, newrows + n);
        }
    }
    if (!have_best ||
        std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end())) {
        best = cand;
        std::memcpy(best_perm, perm, static_cast<size_t>(n) * sizeof(int));
        have_best = true;
    }
}

void Workspace::search(const int* colour_in) {
    int colour[MAXN];
    std::memcpy(colour, colour_in, static_cast<size_t>(n) * sizeof(int));
    refine(colour);
    int counts[MAXN];
    std::memset(counts, 0, sizeof(counts));
    int ncolours = 0;
    for (int v = 0; v < n; ++v) {
        counts[colour[v]]++;
        ncolours = std::max(ncolours, colour[v] + 1);
    }
    int target = -1;
    for (int c = 0; c < ncolours; ++c)
        if (counts[c] >= 2) {
            target = c;
            break;
        }
    if (target < 0) {
        encode_leaf(colour);
        return;
    }
    int cell[MAXN], csz = 0;
    for (int v = 0; v < n; ++v)
        if (colour[v] == target) cell[csz++] = v;
    int reps[MAXN], nreps = 0;
    for (int i = 0; i < csz; ++i) {
        bool merged = false;
        for (int j = 0; j < nreps && !merged; ++j) merged = twins(reps[j], cell[i]);
        if (!merged) reps[nreps++] = cell[i];
    }
    for (int i = 0; i < nreps; ++i) {
        const int v = reps[i];
        int child[MAXN];
        for (int w = 0; w < n; ++w) child[w] = colour[w] > target ? colour[w] + 1 : colour[w];
        for (int j = 0; j < csz; ++j)
            if (cell[j] != v) child[cell[j]] = target + 1;
        child[v] = target;
        search(child);
    }
}

void Workspace::run(const FiniteStructure& s) {
    load(s);
    have_best = false;
    leaf_budget = 1L << 22;
    if (n == 0) {
        best.clear();
        have_best = true;
        return;
    }
    int colour[MAXN];
    initial_colours(colour);
    search(colour);
}

Workspace& workspace() {
    thread_local Workspace w;
    return w;
}

// append the low n bits of word to a byte stream, LSB first
struct BitWriter {
    std::string& out;
    std::uint8_t acc = 0;
    int used = 0;

    void push(std::uint64_t word, int nbits) {
        for (int i = 0; i < nbits; ++i) {
            acc |= static_cast<std::uint8_t>((word >> i) & 1u) << used;
            if (++used == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                used = 0;
            }
        }
    }
    void align() {
        if (used) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            used = 0;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const FiniteStructure& s) {
    Workspace& w = workspace();
    w.run(s);
    CanonicalForm form;
    form.bytes.push_back(static_cast<char>(s.size()));
    if (w.n == 0) return form;  // no leaf was encoded; every word below would be empty
    BitWriter bw{form.bytes};
    size_t word = 0;
    for (int r = 0; r < w.nrel; ++r) {
        if (w.rel_arity[r] == 1) {
            bw.push(w.best[word++], w.n);
        } else {
            for (int u = 0; u < w.n; ++u) bw.push(w.best[word++], w.n);
        }
        bw.align();
    }
    return form;
}

std::vector<int> canonical_labelling(const FiniteStructure& s) {
    Workspace& w = workspace();
    w.run(s);
    return std::vector<int>(w.best_perm, w.best_perm + s.size());
}

std::uint64_t canonical_code64(const FiniteStructure& s) {
    const Signature& sig = s.signature();
    if (sig.size() != 1 || sig.arity(0) != 2 || s.size() > 8)
        throw input_error("canonical_code64: needs one binary relation and size <= 8");
    Workspace& w = workspace();
    w.run(s);
    std::uint64_t code = 0;
    for (int u = 0; u < w.n; ++u) code |= w.best[u] << (u * w.n);
    return code;
}

}
