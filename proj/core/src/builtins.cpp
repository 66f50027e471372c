#include "ageal/builtins.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "ageal/errors.hpp"

namespace ageal {

namespace {

std::optional<int> parse_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos || tail.size() > 3)
        throw input_error("bad parameter in builtin name: " + name);
    return std::stoi(tail);
}

Blueprint blocks_without_cross(std::shared_ptr<const Signature> sig, std::vector<BlockSpec> blocks) {
    FiniteStructure t(std::move(sig), static_cast<int>(blocks.size()));
    return Blueprint(std::move(t), std::move(blocks));
}

Blueprint clique_blueprint() {
    return blocks_without_cross(kind_signature(StructureKind::graph), {{BlockSpec::omega, InnerKind::complete}});
}

Blueprint coclique_blueprint() {
    return blocks_without_cross(kind_signature(StructureKind::graph), {{BlockSpec::omega, InnerKind::empty}});
}

Blueprint chain_blueprint() {
    return blocks_without_cross(kind_signature(StructureKind::tournament), {{BlockSpec::omega, InnerKind::chain}});
}

Blueprint k_cliques_blueprint(int k) {
    if (k < 1 || k > 10) throw input_error("k-cliques needs 1 <= k <= 10");
    std::vector<BlockSpec> blocks(k, BlockSpec{BlockSpec::omega, InnerKind::complete});
    return blocks_without_cross(kind_signature(StructureKind::graph), std::move(blocks));
}

Blueprint clique_plus_coclique_blueprint() {
    return blocks_without_cross(kind_signature(StructureKind::graph),
                                {{BlockSpec::omega, InnerKind::complete}, {BlockSpec::omega, InnerKind::empty}});
}

Blueprint wheel_plus_coclique_blueprint() {
    // block 0: the hub; block 1: its omega many neighbours; block 2: an
    // omega coclique seeing nothing
    FiniteStructure t(kind_signature(StructureKind::graph), 3);
    t.add_pair(0, 0, 1);
    return Blueprint(std::move(t), {{1, InnerKind::empty},
                                    {BlockSpec::omega, InnerKind::empty},
                                    {BlockSpec::omega, InnerKind::empty}});
}

Blueprint c3_chains_blueprint() {
    FiniteStructure t(kind_signature(StructureKind::tournament), 3);
    t.add_pair(0, 0, 1);
    t.add_pair(0, 1, 2);
    t.add_pair(0, 2, 0);
    return Blueprint(std::move(t), std::vector<BlockSpec>(3, BlockSpec{BlockSpec::omega, InnerKind::chain}));
}

Blueprint matching_window_blueprint(int t) {
    if (t < 1 || t > 32) throw input_error("matching-window needs 1 <= t <= 32");
    std::vector<BlockSpec> blocks(t, BlockSpec{2, InnerKind::complete});
    return blocks_without_cross(kind_signature(StructureKind::graph), std::move(blocks));
}

Blueprint path_window_blueprint(int t) {
    if (t < 1 || t > 64) throw input_error("path-window needs 1 <= t <= 64");
    FiniteStructure s(kind_signature(StructureKind::graph), t);
    for (int i = 0; i + 1 < t; ++i) s.add_pair(0, i, i + 1);
    return Blueprint(std::move(s), std::vector<BlockSpec>(t, BlockSpec{1, InnerKind::empty}));
}

Blueprint rado_window_blueprint(int t) {
    if (t < 1 || t > 64) throw input_error("rado-window needs 1 <= t <= 64");
    FiniteStructure s(kind_signature(StructureKind::graph), t);
    for (int j = 1; j < t; ++j)
        for (int i = 0; i < j && i < 31; ++i)
            if ((j >> i) & 1) s.add_pair(0, i, j);
    return Blueprint(std::move(s), std::vector<BlockSpec>(t, BlockSpec{1, InnerKind::empty}));
}

}  // namespace

Blueprint builtin_blueprint(const std::string& name) {
    if (name == "clique") return clique_blueprint();
    if (name == "coclique") return coclique_blueprint();
    if (name == "chain") return chain_blueprint();
    if (name == "clique-plus-coclique") return clique_plus_coclique_blueprint();
    if (name == "wheel-plus-coclique") return wheel_plus_coclique_blueprint();
    if (name == "c3-chains") return c3_chains_blueprint();
    if (auto k = parse_suffix(name, "k-cliques:")) return k_cliques_blueprint(*k);
    if (auto t = parse_suffix(name, "matching-window:")) return matching_window_blueprint(*t);
    if (auto t = parse_suffix(name, "path-window:")) return path_window_blueprint(*t);
    if (auto t = parse_suffix(name, "rado-window:")) return rado_window_blueprint(*t);
    throw input_error("unknown builtin blueprint: " + name);
}

std::vector<std::string> infinite_builtin_names() {
    return {"clique",     "coclique",    "chain",
            "k-cliques:2", "k-cliques:3", "k-cliques:4",
            "clique-plus-coclique", "wheel-plus-coclique", "c3-chains"};
}

std::vector<std::string> all_builtin_names() {
    std::vector<std::string> names = infinite_builtin_names();
    names.push_back("matching-window:3");
    names.push_back("path-window:4");
    names.push_back("rado-window:4");
    return names;
}

namespace {

void check_ground(int k) {
    if (k < 1 || k > groupoid_ground_cap) throw cap_exceeded("groupoid ground set out of range");
}

// one entry per (domain mask, image mask) pair of equal size: the unique
// order-preserving bijection between them
PermutationGroupoid qsym_groupoid(int k) {
    check_ground(k);
    PermutationGroupoid g;
    g.k = k;
    for (std::uint32_t dom = 0; dom < (std::uint32_t{1} << k); ++dom)
        for (std::uint32_t im = 0; im < (std::uint32_t{1} << k); ++im) {
            if (std::popcount(dom) != std::popcount(im)) continue;
            PartialInjection f;
            f.img.assign(k, -1);
            std::uint32_t rest = im;
            for (int i = 0; i < k; ++i)
                if (dom & (std::uint32_t{1} << i)) {
                    f.img[i] = std::countr_zero(rest);
                    rest &= rest - 1;
                }
            g.elements.push_back(std::move(f));
        }
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

// every partial injection of {1..k}
PermutationGroupoid sym_groupoid(int k) {
    check_ground(k);
    PermutationGroupoid g;
    g.k = k;
    for (std::uint32_t dom = 0; dom < (std::uint32_t{1} << k); ++dom) {
        std::vector<int> dom_elems, im_elems;
        for (int i = 0; i < k; ++i)
            if (dom & (std::uint32_t{1} << i)) dom_elems.push_back(i);
        for (std::uint32_t im = 0; im < (std::uint32_t{1} << k); ++im) {
            if (std::popcount(dom) != std::popcount(im)) continue;
            im_elems.clear();
            for (int i = 0; i < k; ++i)
                if (im & (std::uint32_t{1} << i)) im_elems.push_back(i);
            std::vector<int> perm = im_elems;
            std::sort(perm.begin(), perm.end());
            do {
                PartialInjection f;
                f.img.assign(k, -1);
                for (std::size_t i = 0; i < dom_elems.size(); ++i) f.img[dom_elems[i]] = perm[i];
                g.elements.push_back(std::move(f));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

}  // namespace

PermutationGroupoid builtin_groupoid(const std::string& name) {
    if (name == "noncm") return close(3, {PartialInjection::from_map(3, {{0, 1}})});
    if (auto k = parse_suffix(name, "trivial:")) {
        check_ground(*k);
        return close(*k, {});
    }
    if (auto k = parse_suffix(name, "qsym:")) return qsym_groupoid(*k);
    if (auto k = parse_suffix(name, "sym:")) return sym_groupoid(*k);
    throw input_error("unknown builtin groupoid: " + name);
}

std::vector<std::string> builtin_groupoid_names() {
    return {"noncm", "trivial:2", "trivial:3", "qsym:2", "qsym:3", "sym:2", "sym:3"};
}

std::vector<WreathPair> builtin_wreath_pairs() {
    std::vector<WreathPair> pairs;

    // trivial group on three points <-> three coclique blocks told apart by
    // unary marks; both sides count all monomials of each degree
    {
        std::vector<RelationSpec> rels{{"edge", 2, true, true}};
        for (int i = 1; i <= 3; ++i) rels.push_back({"m" + std::to_string(i), 1, false, false});
        FiniteStructure t(make_signature(std::move(rels)), 3);
        for (int i = 0; i < 3; ++i) t.add_unary(1 + i, i);
        Blueprint marked(std::move(t), std::vector<BlockSpec>(3, BlockSpec{BlockSpec::omega, InnerKind::empty}));
        pairs.push_back(WreathPair{"trivial:3", 3, {}, std::move(marked)});
    }

    PartialInjection swap2 = PartialInjection::from_map(2, {{0, 1}, {1, 0}});

    // S_k <-> k interchangeable clique blocks; both sides count partitions
    // into at most k parts
    pairs.push_back(WreathPair{"sym:2", 2, {swap2}, builtin_blueprint("k-cliques:2")});
    pairs.push_back(WreathPair{"sym:3", 3,
                               {PartialInjection::from_map(3, {{0, 1}, {1, 0}, {2, 2}}),
                                PartialInjection::from_map(3, {{0, 1}, {1, 2}, {2, 0}})},
                               builtin_blueprint("k-cliques:3")});

    // the order-2 group <-> two coclique blocks joined by all cross edges;
    // n-subsets are complete bipartite graphs up to swapping the sides
    {
        FiniteStructure t(kind_signature(StructureKind::graph), 2);
        t.add_pair(0, 0, 1);
        Blueprint crossed(std::move(t), std::vector<BlockSpec>(2, BlockSpec{BlockSpec::omega, InnerKind::empty}));
        pairs.push_back(WreathPair{"c2-crossed", 2, {swap2}, std::move(crossed)});
    }

    return pairs;
}

}
