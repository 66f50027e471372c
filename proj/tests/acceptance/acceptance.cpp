// Acceptance sweep: thirteen end-to-end criteria, one pass/fail line each.
// All comparisons are exact; the expected constants are frozen in this file.
// Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ageal/algebra.hpp"
#include "ageal/builtins.hpp"
#include "ageal/decomposition.hpp"
#include "ageal/groupoid.hpp"
#include "ageal/series.hpp"
#include "ageal/smallrng.hpp"
#include "ageal/structure.hpp"

using namespace ageal;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail = "") {
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL") << " " << (criterion < 10 ? " " : "") << criterion << "  " << label;
    if (!ok && !detail.empty()) os << " [" << detail << "]";
    std::cout << os.str() << std::endl;
    if (!ok) ++failures;
}

long partitions_at_most(int n, int k) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

long compositions_at_most(int n, int k) {
    if (n == 0) return 1;
    long total = 0;
    for (int j = 1; j <= std::min(n, k); ++j) {
        long binom = 1;
        for (int i = 1; i < j; ++i) binom = binom * (n - i) / i;
        total += binom;
    }
    return total;
}

SeriesPrefix prefix_of(const std::string& name, int N) {
    return SeriesPrefix::from_counts(profile_prefix(builtin_blueprint(name), N));
}

// criterion 1: the two-block clique/coclique profile fits both displayed
// rational forms with zero residual
void criterion_1() {
    SeriesPrefix phi = prefix_of("clique-plus-coclique", 20);
    FitResult power = fit_rational(phi, std::vector<int>{1, 1});
    FitResult staircase = fit_rational(phi, std::vector<int>{1, 2});
    bool ok = power.ok && power.form.numerator.c == std::vector<Int>{Int(1), Int(-1), Int(1)} &&
              staircase.ok && staircase.form.numerator.c == std::vector<Int>{Int(1), Int(0), Int(0), Int(1)} &&
              expand(power.form, 20) == phi.phi && expand(staircase.form, 20) == phi.phi;
    report(1, "clique-plus-coclique profile fits both displayed rational forms exactly", ok);
}

// criterion 2: the wheel blueprint decomposes into three blocks (one finite),
// dimension two, not hereditary-minimal, not finitely generated, and its
// series is (1 - Z + Z^2) / (1-Z)^2
void criterion_2() {
    Blueprint b = builtin_blueprint("wheel-plus-coclique");
    DecompositionReport dec = decomposition_of_blueprint(b, 5);
    int finite_blocks = 0;
    for (const std::vector<int>& block : dec.blocks)
        for (int x : block)
            if (!b.blocks()[x].is_infinite()) ++finite_blocks;
    FitResult fit = fit_rational(prefix_of("wheel-plus-coclique", 16), std::vector<int>{1, 1});
    bool ok = dec.blocks.size() == 3 && finite_blocks == 1 && dec.dimension == 2 &&
              !is_hereditary_minimal(b, 5) && !is_finitely_generated(b, 5) && fit.ok &&
              fit.form.numerator.c == std::vector<Int>{Int(1), Int(-1), Int(1)};
    report(2, "wheel blueprint: 3 blocks, dimension 2, not hereditary-minimal, not finitely generated", ok);
}

// criterion 3: the groupoid closed over 1 -> 2 on three points has Hilbert
// prefix (1 - Z + 2Z^2 - Z^3) / (1-Z)^3 and no nonnegative numerator up to
// exponent bound 8
void criterion_3() {
    PermutationGroupoid g = builtin_groupoid("noncm");
    SeriesPrefix dims = hilbert_prefix(g, 12);
    FitResult fit = fit_rational(dims, std::vector<int>{1, 1, 1});
    NonnegSearchResult search = numerator_nonneg_search(dims, 3, 8);
    bool ok = fit.ok && fit.form.numerator.c == std::vector<Int>{Int(1), Int(-1), Int(2), Int(-1)} &&
              expand(fit.form, 12) == dims.phi && !search.found;
    report(3, "one-arrow groupoid: Hilbert series has no nonnegative numerator up to bound 8", ok);
}

// criterion 4: qsym orbit counts are compositions into at most k parts and
// the staircase numerator is nonnegative, k = 2, 3
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 3 && ok; ++k) {
        PermutationGroupoid g = builtin_groupoid("qsym:" + std::to_string(k));
        SeriesPrefix dims = hilbert_prefix(g, 14);
        for (int n = 0; n <= 14 && ok; ++n)
            if (dims.phi[n] != Int(compositions_at_most(n, k))) {
                ok = false;
                detail = "dimension mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n);
            }
        FitResult fit = fit_rational(dims, k);
        if (ok && (!fit.ok || !fit.form.numerator.nonnegative())) {
            ok = false;
            detail = "staircase numerator not nonnegative at k=" + std::to_string(k);
        }
    }
    report(4, "qsym orbit counts are compositions with at most k parts, nonnegative numerator (k=2,3)", ok,
           detail);
}

// criterion 5: disjoint k-cliques profiles are partitions into at most k
// parts with series 1 / prod_{i<=k} (1 - Z^i), k <= 4
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 4 && ok; ++k) {
        SeriesPrefix phi = prefix_of("k-cliques:" + std::to_string(k), 15);
        for (int n = 0; n <= 15 && ok; ++n)
            if (phi.phi[n] != Int(partitions_at_most(n, k))) {
                ok = false;
                detail = "profile mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n);
            }
        if (!ok) break;
        FitResult fit = fit_rational(phi, k);
        if (!fit.ok || !(fit.form.numerator.c == std::vector<Int>{Int(1)})) {
            ok = false;
            detail = "series numerator is not 1 at k=" + std::to_string(k);
        }
    }
    report(5, "k-cliques profiles are partitions into at most k parts, series 1/prod(1-Z^i), k<=4", ok,
           detail);
}

// criterion 6: the chain-of-three-chains tournament is not finitely
// generated with unbounded profile, a single chain is finitely generated
// with eventually constant profile, and the two verdict routes agree
void criterion_6() {
    Blueprint c3 = builtin_blueprint("c3-chains");
    Blueprint chain = builtin_blueprint("chain");
    TournamentFgReport c3_rule = tournament_finite_generation(c3, 5);
    TournamentFgReport chain_rule = tournament_finite_generation(chain, 5);
    GrowthReport c3_growth = growth_degree(prefix_of("c3-chains", 16));
    BoundedCertificate chain_cert = bounded_profile_certificate(prefix_of("chain", 12));
    bool ok = !c3_rule.finitely_generated && c3_rule.finitely_generated == is_finitely_generated(c3, 5) &&
              c3_growth.fitted && c3_growth.degree == 2 && chain_rule.finitely_generated &&
              chain_rule.finitely_generated == is_finitely_generated(chain, 5) && chain_cert.bounded;
    report(6, "tournament rule: c3-chains not finitely generated, single chain is; verdict routes agree",
           ok);
}

// criterion 7: brute-force and pairwise minimal decompositions agree on all
// graphs, digraphs and tournaments with at most 6 elements plus 200 random
// structures with at most 9
void criterion_7() {
    auto normalized = [](Partition p) {
        for (std::vector<int>& block : p) std::sort(block.begin(), block.end());
        std::sort(p.begin(), p.end());
        return p;
    };
    long compared = 0;
    bool ok = true;
    std::string detail;
    for (StructureKind kind : {StructureKind::graph, StructureKind::tournament, StructureKind::digraph}) {
        for (int n = 1; n <= 6 && ok; ++n)
            for_each_unlabelled(n, kind, [&](const FiniteStructure& s) {
                if (!ok) return;
                SubsetForms table(s);
                ++compared;
                if (!(normalized(minimal_decomposition_bruteforce(s, table)) ==
                      normalized(minimal_decomposition_pairwise(s, table)))) {
                    ok = false;
                    detail = "exhaustive mismatch at size " + std::to_string(n);
                }
            });
        if (!ok) break;
    }
    SplitMix64 rng(20260819);
    for (int rep = 0; rep < 200 && ok; ++rep) {
        StructureKind kind = static_cast<StructureKind>(rng.next() % 3);
        int n = 7 + static_cast<int>(rng.next() % 3);
        FiniteStructure s = random_structure(kind, n, rng);
        SubsetForms table(s);
        ++compared;
        if (!(normalized(minimal_decomposition_bruteforce(s, table)) ==
              normalized(minimal_decomposition_pairwise(s, table)))) {
            ok = false;
            detail = "random mismatch at size " + std::to_string(n);
        }
    }
    report(7, "brute-force and pairwise decompositions agree (" + std::to_string(compared) + " structures)",
           ok, detail);
}

// criterion 8: multiplication by e1 has full column rank in degrees 0..10
// for every infinite builtin, and the profiles are non-decreasing
void criterion_8() {
    bool ok = true;
    std::string detail;
    for (const std::string& name : infinite_builtin_names()) {
        Blueprint b = builtin_blueprint(name);
        for (int n = 0; n <= 10 && ok; ++n)
            if (!e1_full_column_rank(b, n)) {
                ok = false;
                detail = name + " drops rank at degree " + std::to_string(n);
            }
        if (ok && !prefix_of(name, 12).non_decreasing()) {
            ok = false;
            detail = name + " has a decreasing profile";
        }
        if (!ok) break;
    }
    report(8, "e1 multiplication is injective in degrees 0..10 on every infinite builtin", ok, detail);
}

// criterion 9: structure constants are representative-independent (three
// representatives per type, products of degree <= 5), multiplication is
// commutative and associative on 100 random triples, and the polynomial
// realization is a ring homomorphism through degree 6
void criterion_9() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"clique-plus-coclique", "c3-chains"}) {
        Blueprint b = builtin_blueprint(name);
        std::vector<GradedBasis> bases;
        for (int n = 0; n <= 5; ++n) bases.push_back(basis(b, n));
        auto representatives = [&](const IsoType& t) {
            std::vector<CompositionVector> out;
            for (const CompositionVector& v : composition_vectors(b, t.degree)) {
                if (iso_type(b, v) == t.form) out.push_back(v);
                if (out.size() == 3) break;
            }
            return out;
        };
        for (int dr = 2; dr <= 5 && ok; ++dr)
            for (const IsoType& rho : bases[dr].types)
                for (int ds = 1; ds < dr && ok; ++ds)
                    for (const IsoType& sigma : bases[ds].types)
                        for (const IsoType& tau : bases[dr - ds].types) {
                            Int reference = structure_constant(b, rho, sigma, tau);
                            for (const CompositionVector& v : representatives(rho)) {
                                IsoType alt = rho;
                                alt.representative = v;
                                if (structure_constant(b, alt, sigma, tau) != reference) ok = false;
                            }
                            for (const CompositionVector& v : representatives(sigma)) {
                                IsoType alt = sigma;
                                alt.representative = v;
                                if (structure_constant(b, rho, alt, tau) != reference) ok = false;
                            }
                            if (!ok) detail = std::string(name) + ": representative dependence";
                        }
        if (!ok) break;

        std::vector<IsoType> pool;
        for (int n = 1; n <= 2; ++n)
            for (const IsoType& t : bases[n].types) pool.push_back(t);
        SplitMix64 rng(91);
        for (int rep = 0; rep < 50 && ok; ++rep) {
            AlgebraElement f = basis_element(b, pool[rng.next() % pool.size()]);
            AlgebraElement g = scale(Rat(static_cast<long>(1 + rng.next() % 4), 3),
                                     basis_element(b, pool[rng.next() % pool.size()]));
            AlgebraElement h = add(basis_element(b, pool[rng.next() % pool.size()]),
                                   scale(Rat(-2, 5), basis_element(b, pool[rng.next() % pool.size()])));
            if (!(multiply(f, g).coeffs == multiply(g, f).coeffs) ||
                !(multiply(multiply(f, g), h).coeffs == multiply(f, multiply(g, h)).coeffs) ||
                !(multiply(unit_element(b), h).coeffs == h.coeffs)) {
                ok = false;
                detail = std::string(name) + ": ring law violation";
            }
        }
        if (!ok) break;

        SplitMix64 rng2(92);
        for (int rep = 0; rep < 30 && ok; ++rep) {
            // homogeneous pair with total degree <= 6
            int ds = 1 + static_cast<int>(rng2.next() % 3);
            int dt = 1 + static_cast<int>(rng2.next() % (6 - ds > 3 ? 3 : 6 - ds));
            const std::vector<IsoType>& from_s = bases[ds].types;
            const std::vector<IsoType>& from_t = bases[dt].types;
            AlgebraElement f = basis_element(b, from_s[rng2.next() % from_s.size()]);
            AlgebraElement g = basis_element(b, from_t[rng2.next() % from_t.size()]);
            Polynomial lhs = polynomial_realization(b, multiply(f, g), ds + dt);
            Polynomial rhs = poly_product(polynomial_realization(b, f, ds),
                                          polynomial_realization(b, g, dt));
            if (!(lhs == rhs)) {
                ok = false;
                detail = std::string(name) + ": realization is not multiplicative";
            }
        }
        if (!ok) break;
    }
    report(9, "constants representative-independent; ring laws on 100 triples; realization multiplicative",
           ok, detail);
}

// criterion 10: for every infinite builtin the staircase fit yields a
// quasi-polynomial that matches the profile from some n0 on, with degree
// k - 1 and numerator nonzero at 1
void criterion_10() {
    bool ok = true;
    std::string detail;
    for (const std::string& name : infinite_builtin_names()) {
        Blueprint b = builtin_blueprint(name);
        int k = decomposition_of_blueprint(b, 5).dimension;
        SeriesPrefix phi = prefix_of(name, 16);
        FitResult fit = fit_rational(phi, k);
        if (!fit.ok) {
            ok = false;
            detail = name + ": no staircase fit (" + fit.reason + ")";
            break;
        }
        if (fit.form.numerator.eval_one() == 0) {
            ok = false;
            detail = name + ": numerator vanishes at 1";
            break;
        }
        QuasiPolynomial qp = to_quasi_polynomial(fit.form);
        if (qp.degree() != k - 1) {
            ok = false;
            detail = name + ": degree " + std::to_string(qp.degree()) + " with k = " + std::to_string(k);
            break;
        }
        int n0 = validate_quasi_polynomial(qp, phi);  // throws when no suffix matches
        for (int n = n0; n <= 16; ++n)
            if (qp.eval(n) != Rat(phi.phi[n])) {
                ok = false;
                detail = name + ": mismatch at n = " + std::to_string(n);
                break;
            }
        if (!ok) break;
    }
    report(10, "staircase quasi-polynomials of degree k-1 match every infinite builtin profile", ok, detail);
}

// criterion 11: blueprint profiles equal monomial-orbit counts for the
// builtin group/blueprint pairs through degree 8
void criterion_11() {
    bool ok = true;
    std::string detail;
    for (const WreathPair& pair : builtin_wreath_pairs()) {
        WreathReport rep = wreath_crosscheck(pair.k, pair.group_generators, pair.blueprint, 8);
        if (!rep.ok) {
            ok = false;
            detail = pair.name;
        }
    }
    report(11, "profiles equal monomial-orbit counts for the builtin group pairs through degree 8", ok,
           detail);
}

// criterion 12: monomorphic tournament parts of size >= 4, and unions of two
// of them, are acyclic on all tournaments with at most 6 vertices
void criterion_12() {
    TournamentPartScan scan = tournament_remark_check(6);
    report(12,
           "monomorphic tournament parts of size >= 4 are acyclic (" + std::to_string(scan.structures) +
               " tournaments, " + std::to_string(scan.parts) + " parts)",
           scan.ok, scan.counterexample);
}

// criterion 13: unlabelled graph counts through 6 vertices
void criterion_13() {
    const std::vector<long> expected = {1, 1, 2, 4, 11, 34, 156};
    bool ok = true;
    for (int n = 0; n <= 6; ++n)
        if (static_cast<long>(enumerate_unlabelled(n, StructureKind::graph, 7).size()) != expected[n])
            ok = false;
    report(13, "unlabelled graph classes count 1,1,2,4,11,34,156 for n = 0..6", ok);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    auto seconds =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "ACCEPTED" : "REJECTED") << ": " << (13 - failures)
              << "/13 criteria passed in " << seconds << " s" << std::endl;
    return failures;
}
