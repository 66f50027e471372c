#include "ageal/checks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ageal/algebra.hpp"
#include "ageal/builtins.hpp"
#include "ageal/decomposition.hpp"
#include "ageal/errors.hpp"
#include "ageal/groupoid.hpp"
#include "ageal/json_io.hpp"
#include "ageal/series.hpp"
#include "ageal/smallrng.hpp"

namespace ageal {

namespace {

struct Collector {
    std::vector<CheckResult> results;

    void pass(const std::string& name, const std::string& detail) {
        results.push_back(CheckResult{name, true, detail});
    }
    void fail(const std::string& name, const std::string& detail) {
        results.push_back(CheckResult{name, false, detail});
    }
    void record(const std::string& name, bool ok, const std::string& detail) {
        results.push_back(CheckResult{name, ok, detail});
    }
};

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
    return perm;
}

Partition normalized(Partition p) {
    for (std::vector<int>& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end());
    return p;
}

std::string kind_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::graph: return "graph";
        case StructureKind::digraph: return "digraph";
        case StructureKind::tournament: return "tournament";
    }
    return "?";
}

// compositions of n into at most k parts, every part >= 1
long compositions_at_most(int n, int k) {
    if (n == 0) return 1;
    long total = 0;
    // C(n-1, j-1) compositions with exactly j parts
    for (int j = 1; j <= std::min(n, k); ++j) {
        long binom = 1;
        for (int i = 1; i < j; ++i) binom = binom * (n - i) / i;
        total += binom;
    }
    return total;
}

long partitions_at_most(int n, int k) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

void check_canonical_invariance(Collector& out, SplitMix64& rng) {
    long tried = 0;
    for (StructureKind kind : {StructureKind::graph, StructureKind::digraph, StructureKind::tournament})
        for (int rep = 0; rep < 30; ++rep) {
            int n = 1 + static_cast<int>(rng.next() % 8);
            FiniteStructure s = random_structure(kind, n, rng);
            FiniteStructure t = s.relabelled(random_permutation(n, rng));
            ++tried;
            if (canonical_form(s) != canonical_form(t)) {
                std::ostringstream os;
                os << kind_name(kind) << " on " << n << " elements changed canonical form under relabelling";
                out.fail("canonical-relabelling-invariance", os.str());
                return;
            }
            if (!are_isomorphic(s, t)) {
                out.fail("canonical-relabelling-invariance", "relabelled copy not reported isomorphic");
                return;
            }
        }
    out.pass("canonical-relabelling-invariance", std::to_string(tried) + " random relabellings");
}

void check_enumeration_counts(Collector& out) {
    const std::vector<long> graphs = {1, 1, 2, 4, 11, 34};
    const std::vector<long> tournaments = {1, 1, 1, 2, 4, 12};
    const std::vector<long> digraphs = {1, 1, 3, 16, 218};
    auto verify = [&](StructureKind kind, const std::vector<long>& expected) {
        for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
            long got = static_cast<long>(enumerate_unlabelled(n, kind, 10).size());
            if (got != expected[n]) {
                std::ostringstream os;
                os << kind_name(kind) << " classes on " << n << " elements: got " << got << ", expected "
                   << expected[n];
                out.fail("unlabelled-enumeration-counts", os.str());
                return false;
            }
        }
        return true;
    };
    if (verify(StructureKind::graph, graphs) && verify(StructureKind::tournament, tournaments) &&
        verify(StructureKind::digraph, digraphs))
        out.pass("unlabelled-enumeration-counts", "graphs, tournaments and digraphs match the catalogues");
}

void check_decomposition_agreement(Collector& out, SplitMix64& rng) {
    long tried = 0;
    for (StructureKind kind : {StructureKind::graph, StructureKind::digraph, StructureKind::tournament}) {
        int top = kind == StructureKind::digraph ? 4 : 5;
        for (int n = 1; n <= top; ++n)
            for (const FiniteStructure& s : enumerate_unlabelled_structures(n, kind, 10)) {
                SubsetForms table(s);
                ++tried;
                if (normalized(minimal_decomposition_bruteforce(s, table)) !=
                    normalized(minimal_decomposition_pairwise(s, table))) {
                    std::ostringstream os;
                    os << "exhaustive " << kind_name(kind) << " on " << n << " elements";
                    out.fail("decomposition-bruteforce-pairwise", os.str());
                    return;
                }
            }
        for (int rep = 0; rep < 15; ++rep) {
            int n = 6 + static_cast<int>(rng.next() % 3);
            FiniteStructure s = random_structure(kind, n, rng);
            SubsetForms table(s);
            ++tried;
            if (normalized(minimal_decomposition_bruteforce(s, table)) !=
                normalized(minimal_decomposition_pairwise(s, table))) {
                std::ostringstream os;
                os << "random " << kind_name(kind) << " on " << n << " elements";
                out.fail("decomposition-bruteforce-pairwise", os.str());
                return;
            }
        }
    }
    out.pass("decomposition-bruteforce-pairwise", std::to_string(tried) + " structures compared");
}

void check_profile_window_consistency(Collector& out) {
    struct Case {
        const char* name;
        int n_max;
    };
    for (const Case& c : {Case{"clique-plus-coclique", 5}, Case{"wheel-plus-coclique", 5},
                          Case{"c3-chains", 4}, Case{"k-cliques:2", 4}, Case{"chain", 5}}) {
        Blueprint b = builtin_blueprint(c.name);
        for (int n = 0; n <= c.n_max; ++n) {
            long via_types = profile(b, n);
            long via_subsets = profile_of_finite(window(b, std::max(n, 1)), n);
            if (via_types != via_subsets) {
                std::ostringstream os;
                os << c.name << " phi(" << n << "): composition types give " << via_types
                   << ", window subsets give " << via_subsets;
                out.fail("profile-window-consistency", os.str());
                return;
            }
        }
    }
    out.pass("profile-window-consistency", "composition counting matches subset counting");
}

void check_profile_known_values(Collector& out) {
    auto expect = [&](const char* name, const std::vector<long>& want) {
        std::vector<long> got = profile_prefix(builtin_blueprint(name), static_cast<int>(want.size()) - 1);
        if (got != want) {
            std::ostringstream os;
            os << name << " profile prefix mismatch: got";
            for (long v : got) os << " " << v;
            out.fail("profile-known-values", os.str());
            return false;
        }
        return true;
    };
    bool ok = expect("clique-plus-coclique", {1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) &&
              expect("wheel-plus-coclique", {1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) &&
              expect("c3-chains", {1, 1, 1, 2, 2, 3, 5, 6, 8}) &&
              expect("chain", {1, 1, 1, 1, 1, 1, 1, 1}) &&
              expect("rado-window:4", {1, 1, 2, 3, 1}) &&
              expect("matching-window:3", {1, 1, 2, 2, 2, 1, 1});
    if (ok) {
        std::vector<long> got = profile_prefix(builtin_blueprint("k-cliques:3"), 10);
        for (int n = 0; n <= 10; ++n)
            if (got[n] != partitions_at_most(n, 3)) {
                out.fail("profile-known-values", "k-cliques:3 is not counting partitions into at most 3 parts");
                return;
            }
        out.pass("profile-known-values", "frozen prefixes reproduced");
    }
}

void check_shape_thresholds(Collector& out) {
    int cpc = shape_preservation_threshold(builtin_blueprint("clique-plus-coclique"), 10);
    int c3 = shape_preservation_threshold(builtin_blueprint("c3-chains"), 10);
    if (cpc != 1 || c3 != 1) {
        std::ostringstream os;
        os << "thresholds moved: clique-plus-coclique " << cpc << ", c3-chains " << c3;
        out.fail("shape-preservation-threshold", os.str());
        return;
    }
    out.pass("shape-preservation-threshold", "both reference blueprints stabilize at 1");
}

void check_algebra_ring_laws(Collector& out, SplitMix64& rng) {
    for (const char* name : {"clique-plus-coclique", "c3-chains"}) {
        Blueprint b = builtin_blueprint(name);
        std::vector<IsoType> pool;
        for (int n = 1; n <= 2; ++n)
            for (const IsoType& t : basis(b, n).types) pool.push_back(t);
        auto random_element = [&]() {
            AlgebraElement f = basis_element(b, pool[rng.next() % pool.size()]);
            if (rng.next() % 2) {
                Rat c(static_cast<long>(1 + rng.next() % 5), static_cast<long>(1 + rng.next() % 3));
                f = add(f, scale(c, basis_element(b, pool[rng.next() % pool.size()])));
            }
            return f;
        };
        for (int rep = 0; rep < 25; ++rep) {
            AlgebraElement f = random_element(), g = random_element(), h = random_element();
            if (!(multiply(f, g).coeffs == multiply(g, f).coeffs)) {
                out.fail("algebra-ring-laws", std::string(name) + ": product not commutative");
                return;
            }
            if (!(multiply(multiply(f, g), h).coeffs == multiply(f, multiply(g, h)).coeffs)) {
                out.fail("algebra-ring-laws", std::string(name) + ": product not associative");
                return;
            }
            if (!(multiply(unit_element(b), f).coeffs == f.coeffs)) {
                out.fail("algebra-ring-laws", std::string(name) + ": unit law failed");
                return;
            }
        }
        GradedBasis b1 = basis(b, 1);
        for (const IsoType& rho : basis(b, 2).types)
            for (const IsoType& sigma : b1.types)
                for (const IsoType& tau : b1.types)
                    if (structure_constant(b, rho, sigma, tau) != structure_constant(b, rho, tau, sigma)) {
                        out.fail("algebra-ring-laws", std::string(name) + ": constants not symmetric");
                        return;
                    }
    }
    out.pass("algebra-ring-laws", "commutativity, associativity, unit and symmetric constants");
}

void check_realization_homomorphism(Collector& out, SplitMix64& rng) {
    for (const char* name : {"clique-plus-coclique", "c3-chains"}) {
        Blueprint b = builtin_blueprint(name);
        std::vector<IsoType> pool;
        for (int n = 1; n <= 2; ++n)
            for (const IsoType& t : basis(b, n).types) pool.push_back(t);
        for (int rep = 0; rep < 15; ++rep) {
            const IsoType& s = pool[rng.next() % pool.size()];
            const IsoType& t = pool[rng.next() % pool.size()];
            AlgebraElement f = basis_element(b, s), g = basis_element(b, t);
            Polynomial lhs = polynomial_realization(b, multiply(f, g), s.degree + t.degree);
            Polynomial rhs =
                poly_product(polynomial_realization(b, f, s.degree), polynomial_realization(b, g, t.degree));
            if (!(lhs == rhs)) {
                out.fail("realization-homomorphism", std::string(name) + ": product image differs");
                return;
            }
        }
    }
    out.pass("realization-homomorphism", "products map to polynomial products");
}

void check_e1_ranks(Collector& out) {
    for (const std::string& name : infinite_builtin_names()) {
        Blueprint b = builtin_blueprint(name);
        for (int n = 0; n <= 5; ++n)
            if (!e1_full_column_rank(b, n)) {
                std::ostringstream os;
                os << name << ": multiplication by e1 drops rank at degree " << n;
                out.fail("e1-injective-small-degrees", os.str());
                return;
            }
    }
    out.pass("e1-injective-small-degrees", "full column rank through degree 5 on all infinite builtins");
}

void check_series_fits(Collector& out) {
    SeriesPrefix chain = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("chain"), 10));
    BoundedCertificate cert = bounded_profile_certificate(chain);
    if (!cert.bounded || !cert.numerator.nonnegative()) {
        out.fail("series-fits", "chain profile not certified bounded");
        return;
    }
    SeriesPrefix cpc = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("clique-plus-coclique"), 14));
    FitResult power = fit_rational(cpc, std::vector<int>{1, 1});
    Poly want;
    want.c = {Int(1), Int(-1), Int(1)};
    if (!power.ok || !(power.form.numerator == want)) {
        out.fail("series-fits", "clique-plus-coclique numerator over (1-Z)^2 is not 1 - Z + Z^2");
        return;
    }
    SeriesPrefix c3 = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("c3-chains"), 14));
    FitResult theorem = fit_rational(c3, 3);
    if (!theorem.ok) {
        out.fail("series-fits", "c3-chains did not fit the staircase denominator: " + theorem.reason);
        return;
    }
    QuasiPolynomial qp = to_quasi_polynomial(theorem.form);
    if (qp.degree() != 2) {
        out.fail("series-fits", "c3-chains quasi-polynomial degree is not 2");
        return;
    }
    validate_quasi_polynomial(qp, c3);
    out.pass("series-fits", "bounded certificate, frozen numerator and quasi-polynomial degree");
}

void check_groupoid_closure(Collector& out) {
    for (const std::string& name : builtin_groupoid_names()) {
        PermutationGroupoid g = builtin_groupoid(name);
        if (!is_closed(g)) {
            out.fail("groupoid-closure-idempotent", name + " is not closed");
            return;
        }
        PermutationGroupoid again = close(g.k, g.elements);
        if (!(again.elements == g.elements)) {
            out.fail("groupoid-closure-idempotent", name + " grew under a second closure");
            return;
        }
    }
    out.pass("groupoid-closure-idempotent", "all builtin groupoids are fixed points of closure");
}

void check_groupoid_dimensions(Collector& out) {
    for (int k : {2, 3}) {
        PermutationGroupoid g = builtin_groupoid("qsym:" + std::to_string(k));
        SeriesPrefix dims = hilbert_prefix(g, 8);
        for (int n = 0; n <= 8; ++n)
            if (dims.phi[n] != Int(compositions_at_most(n, k))) {
                std::ostringstream os;
                os << "qsym:" << k << " dimension at degree " << n << " is " << dims.phi[n].str()
                   << ", expected compositions into at most " << k << " parts";
                out.fail("groupoid-dimensions", os.str());
                return;
            }
    }
    PermutationGroupoid noncm = builtin_groupoid("noncm");
    SeriesPrefix dims = hilbert_prefix(noncm, 8);
    for (int n = 1; n <= 8; ++n) {
        Int expected = Int(n + 2) * Int(n + 1) / 2 - 1;
        if (dims.phi[n] != expected) {
            out.fail("groupoid-dimensions", "noncm dimensions left the frozen formula at degree " +
                                               std::to_string(n));
            return;
        }
    }
    for (int n = 0; n <= 4; ++n) {
        if (Int(static_cast<long>(orbit_basis(noncm, n).orbits.size())) != dims.phi[n]) {
            out.fail("groupoid-dimensions", "orbit basis and Hilbert prefix disagree");
            return;
        }
    }
    out.pass("groupoid-dimensions", "qsym composition counts and the frozen noncm formula hold");
}

void check_group_orbit_routes(Collector& out) {
    PermutationGroupoid s2 = builtin_groupoid("sym:2");
    PermutationGroupoid s3 = builtin_groupoid("sym:3");
    std::vector<PartialInjection> g2, g3;
    for (const PartialInjection& f : s2.elements)
        if (f.domain_mask() == 0b11u) g2.push_back(f);
    for (const PartialInjection& f : s3.elements)
        if (f.domain_mask() == 0b111u) g3.push_back(f);
    for (int n = 1; n <= 5; ++n) {
        // enumeration and cycle-index averaging agree inside this call
        if (group_multiset_orbits(2, g2, n) != partitions_at_most(n, 2) ||
            group_multiset_orbits(3, g3, n) != partitions_at_most(n, 3)) {
            out.fail("group-orbit-routes", "symmetric group orbit counts left the partition numbers at n = " +
                                              std::to_string(n));
            return;
        }
    }
    out.pass("group-orbit-routes", "Burnside and direct enumeration match the partition counts");
}

void check_wreath_pairs(Collector& out) {
    for (const WreathPair& pair : builtin_wreath_pairs()) {
        WreathReport rep = wreath_crosscheck(pair.k, pair.group_generators, pair.blueprint, 6);
        if (!rep.ok) {
            out.fail("wreath-profile-crosscheck", pair.name + ": profile and orbit counts diverged");
            return;
        }
    }
    out.pass("wreath-profile-crosscheck", "every paired blueprint matches its monomial action");
}

void check_json_round_trips(Collector& out, SplitMix64& rng) {
    FiniteStructure s = random_structure(StructureKind::graph, 5, rng);
    FiniteStructure s2 = structure_from_json(to_json(s));
    if (!(s == s2) || classify_input(to_json(s)) != InputKind::structure) {
        out.fail("json-round-trips", "structure round trip changed the structure");
        return;
    }
    Blueprint b = builtin_blueprint("clique-plus-coclique");
    Blueprint b2 = blueprint_from_json(to_json(b));
    if (profile_prefix(b2, 6) != profile_prefix(b, 6) || classify_input(to_json(b)) != InputKind::blueprint) {
        out.fail("json-round-trips", "blueprint round trip changed the profile");
        return;
    }
    PermutationGroupoid g = builtin_groupoid("qsym:2");
    PermutationGroupoid g2 = groupoid_from_json(to_json(g));
    if (!(g2.elements == g.elements) || classify_input(to_json(g)) != InputKind::groupoid) {
        out.fail("json-round-trips", "groupoid round trip changed the element set");
        return;
    }
    SeriesPrefix p = SeriesPrefix::from_counts({1, 1, 2, 3, 5});
    SeriesPrefix p2 = series_from_json(to_json(p));
    if (!(p2.phi == p.phi) || classify_input(to_json(p)) != InputKind::series) {
        out.fail("json-round-trips", "series round trip changed the coefficients");
        return;
    }
    out.pass("json-round-trips", "structure, blueprint, groupoid and series all survive");
}

void check_wheel_kernel(Collector& out) {
    KernelReport rep = kernel_elements(builtin_blueprint("wheel-plus-coclique"), 5);
    if (rep.template_blocks != std::vector<int>{0} || rep.elements != std::vector<int>{0}) {
        out.fail("wheel-kernel-hub", "kernel is not exactly the hub");
        return;
    }
    KernelReport cpc = kernel_elements(builtin_blueprint("clique-plus-coclique"), 5);
    if (!cpc.elements.empty()) {
        out.fail("wheel-kernel-hub", "clique-plus-coclique grew a nonempty kernel");
        return;
    }
    out.pass("wheel-kernel-hub", "hub is the kernel; the two-block reference has none");
}

void check_tournament_remark(Collector& out) {
    TournamentPartScan scan = tournament_remark_check(5);
    if (!scan.ok) {
        out.fail("tournament-parts-remark", scan.counterexample);
        return;
    }
    std::ostringstream os;
    os << scan.structures << " tournaments, " << scan.parts << " large parts, " << scan.union_checks
       << " union checks";
    out.pass("tournament-parts-remark", os.str());
}

}  // namespace

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
    Collector out;
    SplitMix64 rng(seed);
    check_canonical_invariance(out, rng);
    check_enumeration_counts(out);
    check_decomposition_agreement(out, rng);
    check_profile_window_consistency(out);
    check_profile_known_values(out);
    check_shape_thresholds(out);
    check_algebra_ring_laws(out, rng);
    check_realization_homomorphism(out, rng);
    check_e1_ranks(out);
    check_series_fits(out);
    check_groupoid_closure(out);
    check_groupoid_dimensions(out);
    check_group_orbit_routes(out);
    check_wreath_pairs(out);
    check_json_round_trips(out, rng);
    check_wheel_kernel(out);
    check_tournament_remark(out);
    return out.results;
}

}
