#include "ageal/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ageal/errors.hpp"

namespace ageal {

namespace {

constexpr int form_table_max = 20;

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

SubsetForms::SubsetForms(const FiniteStructure& s) : n_(s.size()) {
    if (n_ > form_table_max) throw cap_exceeded("structure too large for the subset form table (max 20 elements)");
    const Signature& sig = s.signature();
    bool single_binary = sig.size() == 1 && sig.relations[0].arity == 2;
    compact_ = single_binary && n_ <= 8;
    std::uint64_t count = std::uint64_t{1} << n_;
    if (compact_) {
        codes_.resize(count);
        for (std::uint64_t m = 0; m < count; ++m) codes_[m] = canonical_code64(s.induced(m));
    } else {
        forms_.resize(count);
        for (std::uint64_t m = 0; m < count; ++m) forms_[m] = canonical_form(s.induced(m)).bytes;
    }
}

bool is_monomorphic_part(const SubsetForms& table, std::uint64_t part_mask) {
    int n = table.size();
    std::uint64_t all = full_mask(n);
    if (part_mask & ~all) throw input_error("part mask outside the element range");
    if (std::popcount(part_mask) <= 1) return true;
    std::uint64_t rest = all & ~part_mask;

    std::uint64_t ref[65];
    std::uint64_t c = rest;
    while (true) {
        bool seen[65] = {};
        std::uint64_t d = part_mask;
        while (true) {
            int j = std::popcount(d);
            if (!seen[j]) {
                seen[j] = true;
                ref[j] = c | d;
            } else if (!table.same(ref[j], c | d)) {
                return false;
            }
            if (d == 0) break;
            d = (d - 1) & part_mask;
        }
        if (c == 0) break;
        c = (c - 1) & rest;
    }
    return true;
}

bool is_monomorphic_part(const FiniteStructure& s, std::uint64_t part_mask) {
    return is_monomorphic_part(SubsetForms(s), part_mask);
}

bool is_monomorphic_part(const FiniteStructure& s, const std::vector<int>& part) {
    std::uint64_t mask = 0;
    for (int x : part) {
        if (x < 0 || x >= s.size()) throw input_error("part element out of range");
        if (mask & (std::uint64_t{1} << x)) throw input_error("duplicate part element");
        mask |= std::uint64_t{1} << x;
    }
    return is_monomorphic_part(s, mask);
}

namespace {

Partition partition_from_unions(int n, const std::vector<std::uint64_t>& closure) {
    // closure[x] = union of all monomorphic parts through x; the proposition
    // behind minimality says these are the minimal blocks, so they must tile
    // the element set
    std::vector<char> placed(n, 0);
    Partition out;
    for (int x = 0; x < n; ++x) {
        if (placed[x]) continue;
        std::vector<int> block;
        for (int y = 0; y < n; ++y)
            if (closure[x] & (std::uint64_t{1} << y)) {
                if (closure[y] != closure[x])
                    throw internal_inconsistency("part unions through elements do not tile the structure");
                block.push_back(y);
                placed[y] = 1;
            }
        out.push_back(std::move(block));
    }
    return out;
}

}  // namespace

Partition minimal_decomposition_bruteforce(const FiniteStructure& s, const SubsetForms& table, int cap) {
    int n = s.size();
    if (n > cap) throw cap_exceeded("structure too large for the exhaustive part scan");
    std::uint64_t all = full_mask(n);
    std::vector<char> mono(std::size_t{1} << n, 0);
    for (std::uint64_t b = 0; b <= all; ++b) {
        if (std::popcount(b) <= 1) {
            mono[b] = 1;
            continue;
        }
        mono[b] = is_monomorphic_part(table, b) ? 1 : 0;
        if (b == all) break;
    }
    std::vector<std::uint64_t> closure(n);
    for (int x = 0; x < n; ++x) {
        std::uint64_t u = std::uint64_t{1} << x;
        for (std::uint64_t b = 0; b <= all; ++b) {
            if (mono[b] && (b & (std::uint64_t{1} << x))) u |= b;
            if (b == all) break;
        }
        closure[x] = u;
        if (!mono[u]) throw internal_inconsistency("union of parts through an element is not itself a part");
    }
    return partition_from_unions(n, closure);
}

Partition minimal_decomposition_bruteforce(const FiniteStructure& s, int cap) {
    return minimal_decomposition_bruteforce(s, SubsetForms(s), cap);
}

Partition minimal_decomposition_pairwise(const FiniteStructure& s, const SubsetForms& table, int cap) {
    int n = s.size();
    if (n > cap) throw cap_exceeded("structure too large for the pairwise part scan");
    std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) {
        related[x][x] = 1;
        for (int y = x + 1; y < n; ++y) {
            std::uint64_t pair = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
            related[x][y] = related[y][x] = is_monomorphic_part(table, pair) ? 1 : 0;
        }
    }
    std::vector<char> placed(n, 0);
    Partition out;
    for (int x = 0; x < n; ++x) {
        if (placed[x]) continue;
        std::vector<int> block;
        for (int y = x; y < n; ++y)
            if (related[x][y]) {
                block.push_back(y);
                placed[y] = 1;
            }
        // the relation is an equivalence by the minimality theorem; verify
        // rather than trust
        for (int a : block)
            for (int b : block)
                if (!related[a][b])
                    throw internal_inconsistency("pairwise part relation is not transitive on this structure");
        out.push_back(std::move(block));
    }
    return out;
}

Partition minimal_decomposition_pairwise(const FiniteStructure& s, int cap) {
    return minimal_decomposition_pairwise(s, SubsetForms(s), cap);
}

namespace {

// pull a window partition back to template indices; every window block must
// be a union of whole per-index element ranges
Partition pull_back(const Blueprint& b, const CompositionVector& wv, const Partition& window_blocks) {
    std::vector<long> off = block_offsets(wv);
    long total = off.back();
    std::vector<int> block_of(total, -1);
    for (int w = 0; w < static_cast<int>(window_blocks.size()); ++w)
        for (int e : window_blocks[w]) block_of[e] = w;

    int m = b.block_count();
    std::map<int, std::vector<int>> grouped;
    std::vector<int> empty_indices;
    for (int x = 0; x < m; ++x) {
        if (off[x] == off[x + 1]) {
            empty_indices.push_back(x);
            continue;
        }
        int w = block_of[off[x]];
        for (long i = off[x]; i < off[x + 1]; ++i)
            if (block_of[i] != w)
                throw internal_inconsistency("window decomposition splits a blueprint block");
        grouped[w].push_back(x);
    }
    Partition out;
    for (auto& [w, idxs] : grouped) out.push_back(std::move(idxs));
    // zero-cardinality blocks carry no elements; keep them as singletons
    for (int x : empty_indices) out.push_back({x});
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

DecompositionReport decomposition_of_blueprint(const Blueprint& b, int t_max) {
    if (t_max < 2) throw input_error("window bound must be at least 2");
    DecompositionReport rep;
    Partition prev;
    bool have_prev = false;
    rep.stabilized = false;
    for (int t = 2; t <= t_max; ++t) {
        CompositionVector wv = window_vector(b, t);
        long total = block_offsets(wv).back();
        if (total > form_table_max) throw cap_exceeded("window too large; lower the window bound");
        FiniteStructure w = blow_up(b, wv);
        SubsetForms table(w);
        Partition part = pull_back(b, wv, minimal_decomposition_pairwise(w, table, form_table_max));
        if (have_prev) rep.stabilized = (part == prev);
        prev = std::move(part);
        have_prev = true;
    }
    rep.blocks = std::move(prev);
    rep.window = t_max;
    rep.dimension = 0;
    for (const std::vector<int>& block : rep.blocks)
        for (int x : block)
            if (b.blocks()[x].is_infinite()) {
                ++rep.dimension;
                break;
            }
    return rep;
}

bool is_hereditary_minimal(const Blueprint& b, int t_max) {
    DecompositionReport rep = decomposition_of_blueprint(b, t_max);
    if (!rep.stabilized) throw cap_exceeded("window decomposition did not stabilize; raise the window bound");
    std::vector<std::vector<int>> infinite_parts;
    for (const std::vector<int>& block : rep.blocks)
        for (int x : block)
            if (b.blocks()[x].is_infinite()) {
                infinite_parts.push_back(block);
                break;
            }
    int k = static_cast<int>(infinite_parts.size());
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
        std::vector<int> indices;
        std::vector<std::vector<int>> expected;
        for (int i = 0; i < k; ++i)
            if (sub & (std::uint32_t{1} << i)) {
                for (int x : infinite_parts[i]) indices.push_back(x);
                expected.push_back(infinite_parts[i]);
            }
        std::sort(indices.begin(), indices.end());
        std::vector<int> pos(b.block_count(), -1);
        for (int i = 0; i < static_cast<int>(indices.size()); ++i) pos[indices[i]] = i;
        for (std::vector<int>& block : expected)
            for (int& x : block) x = pos[x];
        std::sort(expected.begin(), expected.end(),
                  [](const std::vector<int>& a, const std::vector<int>& c) { return a.front() < c.front(); });

        DecompositionReport sub_rep = decomposition_of_blueprint(b.restricted(indices), t_max);
        if (!sub_rep.stabilized)
            throw cap_exceeded("window decomposition of a restriction did not stabilize; raise the window bound");
        if (sub_rep.blocks != expected) return false;
    }
    return true;
}

bool is_finitely_generated(const Blueprint& b, int t_max) { return is_hereditary_minimal(b, t_max); }

namespace {

// compositions d <= counts pointwise with |d| = n
void capped_compositions_rec(const CompositionVector& counts, std::size_t idx, long rem, CompositionVector& cur,
                             const std::function<void(const CompositionVector&)>& visit) {
    if (idx == counts.size()) {
        if (rem == 0) visit(cur);
        return;
    }
    long hi = std::min(counts[idx], rem);
    for (long c = 0; c <= hi; ++c) {
        cur[idx] = c;
        capped_compositions_rec(counts, idx + 1, rem - c, cur, visit);
    }
    cur[idx] = 0;
}

// iso types of the n-subsets of the blow-up of counts; subsets of a blow-up
// induce blow-ups of sub-compositions, so this is exact
std::set<std::string> window_age_level(const Blueprint& b, const CompositionVector& counts, int n) {
    std::set<std::string> forms;
    CompositionVector cur(counts.size(), 0);
    capped_compositions_rec(counts, 0, n, cur,
                            [&](const CompositionVector& d) { forms.insert(iso_type(b, d).bytes); });
    return forms;
}

}  // namespace

KernelReport kernel_elements(const Blueprint& b, int t_max, int n_max) {
    if (t_max < 0) throw input_error("window bound must be nonnegative");
    if (n_max < 0) throw input_error("age bound must be nonnegative");

    KernelReport rep;
    rep.window = t_max;
    rep.bound = n_max;
    rep.stabilized = decomposition_of_blueprint(b, t_max).stabilized;

    CompositionVector wv = window_vector(b, t_max);
    std::vector<long> off = block_offsets(wv);
    std::vector<std::size_t> base(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n) base[n] = window_age_level(b, wv, n).size();

    for (int x = 0; x < b.block_count(); ++x) {
        if (b.blocks()[x].is_infinite() || wv[x] == 0) continue;
        CompositionVector shrunk = wv;
        shrunk[x] -= 1;
        bool lost = false;
        for (int n = 1; n <= n_max && !lost; ++n)
            if (window_age_level(b, shrunk, n).size() != base[n]) lost = true;
        if (!lost) continue;
        rep.template_blocks.push_back(x);
        for (long i = off[x]; i < off[x + 1]; ++i) rep.elements.push_back(static_cast<int>(i));
    }
    return rep;
}

namespace {

bool transitive_on(const FiniteStructure& s, std::uint64_t mask) {
    int adj = 0;
    std::vector<int> elems;
    for (int v = 0; v < s.size(); ++v)
        if (mask & (std::uint64_t{1} << v)) elems.push_back(v);
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            for (std::size_t c = b + 1; c < elems.size(); ++c) {
                int u = elems[a], v = elems[b], w = elems[c];
                bool cyc = (s.has_pair(adj, u, v) && s.has_pair(adj, v, w) && s.has_pair(adj, w, u)) ||
                           (s.has_pair(adj, v, u) && s.has_pair(adj, u, w) && s.has_pair(adj, w, v));
                if (cyc) return false;
            }
    return true;
}

std::string describe_tournament(const FiniteStructure& s, std::uint64_t mask, const char* label) {
    std::ostringstream os;
    os << "n=" << s.size() << " arcs=";
    bool first = true;
    for (const std::vector<int>& arc : s.tuples(0)) {
        os << (first ? "" : ",") << arc[0] << ">" << arc[1];
        first = false;
    }
    os << " " << label << "={";
    bool f2 = true;
    for (int v = 0; v < s.size(); ++v)
        if (mask & (std::uint64_t{1} << v)) {
            os << (f2 ? "" : ",") << v;
            f2 = false;
        }
    os << "}";
    return os.str();
}

}  // namespace

TournamentPartScan tournament_remark_check(int n_max) {
    if (n_max < 0) throw input_error("size bound must be nonnegative");
    if (n_max > 7) throw cap_exceeded("tournament scan supports at most 7 elements");
    TournamentPartScan scan;
    for (int n = 4; n <= n_max; ++n) {
        for (const FiniteStructure& s : enumerate_unlabelled_structures(n, StructureKind::tournament)) {
            ++scan.structures;
            SubsetForms table(s);
            std::vector<std::uint64_t> parts;
            std::uint64_t all = full_mask(n);
            for (std::uint64_t b = 0; b <= all; ++b) {
                if (std::popcount(b) >= 4 && is_monomorphic_part(table, b)) parts.push_back(b);
                if (b == all) break;
            }
            scan.parts += static_cast<long>(parts.size());
            for (std::uint64_t p : parts)
                if (!transitive_on(s, p)) {
                    scan.ok = false;
                    if (scan.counterexample.empty()) scan.counterexample = describe_tournament(s, p, "part");
                }
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    ++scan.union_checks;
                    if (!transitive_on(s, parts[i] | parts[j])) {
                        scan.ok = false;
                        if (scan.counterexample.empty())
                            scan.counterexample = describe_tournament(s, parts[i] | parts[j], "union");
                    }
                }
        }
    }
    return scan;
}

TournamentFgReport tournament_finite_generation(const Blueprint& b, int t_max) {
    const Signature& sig = b.template_structure().signature();
    if (sig.size() != 1 || sig.relations[0].arity != 2 || sig.relations[0].symmetric)
        throw input_error("tournament blueprints need exactly one non-symmetric binary relation");
    const FiniteStructure& tmpl = b.template_structure();
    for (int x = 0; x < tmpl.size(); ++x)
        for (int y = x + 1; y < tmpl.size(); ++y)
            if (tmpl.has_pair(0, x, y) == tmpl.has_pair(0, y, x))
                throw input_error("tournament template needs exactly one arc between any two blocks");
    for (const BlockSpec& bs : b.blocks())
        if ((bs.is_infinite() || bs.cardinality >= 2) && bs.inner != InnerKind::chain)
            throw input_error("tournament blocks with more than one element must be chains");

    TournamentFgReport rep;
    rep.decomposition = decomposition_of_blueprint(b, t_max);
    if (!rep.decomposition.stabilized)
        throw cap_exceeded("window decomposition did not stabilize; raise the window bound");
    int k = rep.decomposition.dimension;
    rep.finitely_generated = k <= 1;
    std::ostringstream os;
    if (k == 0)
        os << "no infinite block: the age is finite, so the age algebra is trivially finitely generated";
    else if (k == 1)
        os << "one infinite block in the minimal decomposition: the profile is bounded, and a tournament "
              "with bounded profile has finitely generated age algebra";
    else
        os << k
           << " infinite blocks in the minimal decomposition: the profile is unbounded, and a tournament "
              "with unbounded profile has no finitely generated age algebra";
    rep.reason = os.str();
    return rep;
}

}
