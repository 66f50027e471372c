#include "ageal/groupoid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "ageal/errors.hpp"

namespace ageal {

std::uint32_t PartialInjection::domain_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < k(); ++i)
        if (img[i] >= 0) m |= std::uint32_t{1} << i;
    return m;
}

std::uint32_t PartialInjection::image_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < k(); ++i)
        if (img[i] >= 0) m |= std::uint32_t{1} << img[i];
    return m;
}

PartialInjection PartialInjection::identity(int k) {
    PartialInjection f;
    f.img.resize(k);
    std::iota(f.img.begin(), f.img.end(), 0);
    return f;
}

PartialInjection PartialInjection::identity_on(int k, std::uint32_t mask) {
    PartialInjection f;
    f.img.assign(k, -1);
    for (int i = 0; i < k; ++i)
        if (mask & (std::uint32_t{1} << i)) f.img[i] = i;
    return f;
}

PartialInjection PartialInjection::inverse() const {
    PartialInjection f;
    f.img.assign(k(), -1);
    for (int i = 0; i < k(); ++i)
        if (img[i] >= 0) f.img[img[i]] = i;
    return f;
}

PartialInjection PartialInjection::restricted(std::uint32_t mask) const {
    if (mask & ~domain_mask()) throw input_error("restriction outside the domain");
    PartialInjection f;
    f.img.assign(k(), -1);
    for (int i = 0; i < k(); ++i)
        if (mask & (std::uint32_t{1} << i)) f.img[i] = img[i];
    return f;
}

PartialInjection PartialInjection::after(const PartialInjection& other) const {
    if (other.k() != k()) throw input_error("composition over different ground sets");
    if (other.image_mask() != domain_mask()) throw input_error("composition needs im g = dom f");
    PartialInjection f;
    f.img.assign(k(), -1);
    for (int i = 0; i < k(); ++i)
        if (other.img[i] >= 0) f.img[i] = img[other.img[i]];
    return f;
}

PartialInjection PartialInjection::from_map(int k, const std::vector<std::pair<int, int>>& pairs) {
    if (k < 0 || k > 31) throw input_error("ground size out of range");
    PartialInjection f;
    f.img.assign(k, -1);
    std::uint32_t seen = 0;
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= k || j < 0 || j >= k) throw input_error("partial injection point out of range");
        if (f.img[i] >= 0) throw input_error("partial injection maps a point twice");
        if (seen & (std::uint32_t{1} << j)) throw input_error("partial injection image repeats a point");
        f.img[i] = j;
        seen |= std::uint32_t{1} << j;
    }
    return f;
}

bool PermutationGroupoid::contains(const PartialInjection& f) const {
    return std::binary_search(elements.begin(), elements.end(), f);
}

PermutationGroupoid close(int k, const std::vector<PartialInjection>& generators) {
    if (k < 0 || k > groupoid_ground_cap) throw cap_exceeded("ground set too large for groupoid closure");
    std::set<PartialInjection> done;
    std::vector<PartialInjection> queue;
    auto push = [&](const PartialInjection& f) {
        if (done.insert(f).second) queue.push_back(f);
    };
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << k); ++m) push(PartialInjection::identity_on(k, m));
    for (const PartialInjection& g : generators) {
        if (g.k() != k) throw input_error("generator ground size mismatch");
        push(g);
    }
    while (!queue.empty()) {
        PartialInjection f = queue.back();
        queue.pop_back();
        push(f.inverse());
        std::uint32_t dom = f.domain_mask();
        std::uint32_t sub = dom;
        while (true) {
            push(f.restricted(sub));
            if (sub == 0) break;
            sub = (sub - 1) & dom;
        }
        // compositions with everything already known, both ways
        std::vector<PartialInjection> known(done.begin(), done.end());
        for (const PartialInjection& g : known) {
            if (g.image_mask() == f.domain_mask()) push(f.after(g));
            if (f.image_mask() == g.domain_mask()) push(g.after(f));
        }
    }
    PermutationGroupoid out;
    out.k = k;
    out.elements.assign(done.begin(), done.end());
    return out;
}

bool is_closed(const PermutationGroupoid& g) {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << g.k); ++m)
        if (!g.contains(PartialInjection::identity_on(g.k, m))) return false;
    for (const PartialInjection& f : g.elements) {
        if (!g.contains(f.inverse())) return false;
        std::uint32_t dom = f.domain_mask();
        std::uint32_t sub = dom;
        while (true) {
            if (!g.contains(f.restricted(sub))) return false;
            if (sub == 0) break;
            sub = (sub - 1) & dom;
        }
        for (const PartialInjection& h : g.elements)
            if (h.image_mask() == f.domain_mask() && !g.contains(f.after(h))) return false;
    }
    return true;
}

namespace {

std::vector<Monomial> monomials_of_degree(int k, int n) {
    std::vector<Monomial> out;
    Monomial cur(k, 0);
    auto rec = [&](auto&& self, int idx, long rem) -> void {
        if (idx == k) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (long c = 0; c <= rem; ++c) {
            cur[idx] = c;
            self(self, idx + 1, rem - c);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, n);
    return out;
}

std::uint32_t support_mask(const Monomial& m) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) s |= std::uint32_t{1} << i;
    return s;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MonomialOrbitBasis orbit_basis(const PermutationGroupoid& g, int n) {
    if (n < 0) throw input_error("degree must be nonnegative");
    std::vector<Monomial> mons = monomials_of_degree(g.k, n);
    std::map<Monomial, int> index;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) index.emplace(mons[i], i);
    UnionFind uf(static_cast<int>(mons.size()));
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) {
        std::uint32_t supp = support_mask(mons[i]);
        for (const PartialInjection& f : g.elements) {
            if (supp & ~f.domain_mask()) continue;
            Monomial to(g.k, 0);
            for (int x = 0; x < g.k; ++x)
                if (mons[i][x] > 0) to[f.img[x]] = mons[i][x];
            uf.unite(i, index.at(to));
        }
    }
    std::map<int, std::vector<Monomial>> groups;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) groups[uf.find(i)].push_back(mons[i]);
    MonomialOrbitBasis out;
    out.degree = n;
    for (auto& [root, orbit] : groups) {
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const std::vector<Monomial>& a, const std::vector<Monomial>& b) { return a.front() < b.front(); });
    return out;
}

SeriesPrefix hilbert_prefix(const PermutationGroupoid& g, int N) {
    if (N < 0) throw input_error("prefix length must be nonnegative");
    std::vector<Int> counts;
    for (int n = 0; n <= N; ++n) counts.push_back(Int(orbit_basis(g, n).orbits.size()));
    return SeriesPrefix::from_ints(std::move(counts));
}

namespace {

std::vector<PartialInjection> generate_group(int k, const std::vector<PartialInjection>& generators) {
    for (const PartialInjection& g : generators) {
        if (g.k() != k) throw input_error("generator ground size mismatch");
        if (!g.total()) throw input_error("group generators must be total permutations");
    }
    std::set<PartialInjection> done{PartialInjection::identity(k)};
    std::vector<PartialInjection> queue(done.begin(), done.end());
    while (!queue.empty()) {
        PartialInjection f = queue.back();
        queue.pop_back();
        for (const PartialInjection& g : generators) {
            PartialInjection h = g.after(f);
            if (done.insert(h).second) queue.push_back(h);
        }
    }
    return {done.begin(), done.end()};
}

long orbits_by_enumeration(int k, const std::vector<PartialInjection>& group, int n) {
    std::vector<Monomial> mons = monomials_of_degree(k, n);
    std::map<Monomial, int> index;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) index.emplace(mons[i], i);
    UnionFind uf(static_cast<int>(mons.size()));
    for (int i = 0; i < static_cast<int>(mons.size()); ++i)
        for (const PartialInjection& f : group) {
            Monomial to(k, 0);
            for (int x = 0; x < k; ++x) to[f.img[x]] = mons[i][x];
            uf.unite(i, index.at(to));
        }
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) roots.insert(uf.find(i));
    return static_cast<long>(roots.size());
}

long orbits_by_cycle_index(int k, const std::vector<PartialInjection>& group, int n) {
    // Burnside: average over the group of the number of fixed monomials; a
    // monomial is fixed iff constant on cycles, so count solutions of
    // sum(len_c * v_c) = n
    Int total = 0;
    for (const PartialInjection& f : group) {
        std::vector<int> lens;
        std::vector<char> seen(k, 0);
        for (int s = 0; s < k; ++s) {
            if (seen[s]) continue;
            int len = 0, x = s;
            while (!seen[x]) {
                seen[x] = 1;
                x = f.img[x];
                ++len;
            }
            lens.push_back(len);
        }
        std::vector<Int> ways(n + 1, Int(0));
        ways[0] = 1;
        for (int len : lens)
            for (int v = len; v <= n; ++v) ways[v] += ways[v - len];
        total += ways[n];
    }
    Int size(static_cast<long>(group.size()));
    if (total % size != 0) throw internal_inconsistency("cycle-index average is not an integer");
    Int avg = total / size;
    return avg.convert_to<long>();
}

}  // namespace

long group_multiset_orbits(int k, const std::vector<PartialInjection>& generators, int n) {
    if (k < 0 || k > groupoid_ground_cap) throw cap_exceeded("ground set too large");
    if (n < 0) throw input_error("degree must be nonnegative");
    std::vector<PartialInjection> group = generate_group(k, generators);
    long direct = orbits_by_enumeration(k, group, n);
    long averaged = orbits_by_cycle_index(k, group, n);
    if (direct != averaged) throw internal_inconsistency("orbit enumeration disagrees with cycle-index averaging");
    return direct;
}

WreathReport wreath_crosscheck(int k, const std::vector<PartialInjection>& group_generators, const Blueprint& b,
                               int N) {
    WreathReport rep;
    for (int n = 0; n <= N; ++n) {
        WreathRow row;
        row.degree = n;
        row.profile = profile(b, n);
        row.orbits = group_multiset_orbits(k, group_generators, n);
        if (row.profile != row.orbits) rep.ok = false;
        rep.rows.push_back(row);
    }
    return rep;
}

GenerationReport generation_probe(const PermutationGroupoid& g, int D, int N) {
    if (D < 1) throw input_error("generator degree bound must be positive");
    if (D > N) throw input_error("generator degree bound must not exceed the probe bound");
    GenerationReport rep;
    rep.generator_bound = D;

    std::vector<std::vector<Polynomial>> gens(D + 1);
    for (int d = 1; d <= D; ++d)
        for (const std::vector<Monomial>& orbit : orbit_basis(g, d).orbits) {
            Polynomial p;
            for (const Monomial& m : orbit) p.emplace(m, Rat(1));
            gens[d].push_back(std::move(p));
        }

    std::vector<SpanBasis> spans;
    spans.reserve(N + 1);
    for (int n = 0; n <= N; ++n) spans.emplace_back(TermOrder::deglex);
    Monomial one(g.k, 0);
    spans[0].insert(Polynomial{{one, Rat(1)}});

    for (int n = 1; n <= N; ++n) {
        for (int d = 1; d <= std::min(D, n); ++d)
            for (const Polynomial& gen : gens[d])
                for (const auto& [pivot, row] : spans[n - d].rows()) spans[n].insert(poly_product(gen, row));
        long dim = static_cast<long>(orbit_basis(g, n).orbits.size());
        rep.rows.push_back(GenerationRow{n, spans[n].dimension(), dim});
        if (rep.first_gap < 0 && spans[n].dimension() < dim) rep.first_gap = n;
    }
    return rep;
}

int minimal_generation_degree(const PermutationGroupoid& g, int N, int d_max) {
    for (int D = 1; D <= d_max && D <= N; ++D)
        if (generation_probe(g, D, N).first_gap < 0) return D;
    return -1;
}

}
