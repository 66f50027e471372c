#include "ageal/algebra.hpp"

#include <algorithm>
#include <map>

#include "ageal/errors.hpp"

namespace ageal {

int GradedBasis::index_of(const CanonicalForm& form) const {
    for (int i = 0; i < static_cast<int>(types.size()); ++i)
        if (types[i].form == form) return i;
    return -1;
}

GradedBasis basis(const Blueprint& b, int n) {
    if (n < 0) throw input_error("degree must be nonnegative");
    GradedBasis out;
    out.degree = n;
    std::map<CanonicalForm, CompositionVector> reps;
    for (const CompositionVector& d : composition_vectors(b, n))
        reps.try_emplace(iso_type(b, d), d);  // lex enumeration: first hit is least
    for (auto& [form, rep] : reps) out.types.push_back(IsoType{n, form, rep});
    return out;
}

namespace {

void check_same_blueprint(const Blueprint& a, const Blueprint& b) {
    if (!(a == b)) throw input_error("algebra elements belong to different blueprints");
}

// enumerate p <= d with |p| = m
template <typename Visit>
void sub_vectors_rec(const CompositionVector& d, std::size_t idx, long rem, CompositionVector& p, Visit&& visit) {
    if (idx == d.size()) {
        if (rem == 0) visit(p);
        return;
    }
    long hi = std::min<long>(d[idx], rem);
    for (long c = 0; c <= hi; ++c) {
        p[idx] = c;
        sub_vectors_rec(d, idx + 1, rem - c, p, visit);
    }
    p[idx] = 0;
}

template <typename Visit>
void sub_vectors(const CompositionVector& d, long m, Visit&& visit) {
    CompositionVector p(d.size(), 0);
    sub_vectors_rec(d, 0, m, p, visit);
}

}  // namespace

Int structure_constant(const Blueprint& b, const IsoType& rho, const IsoType& sigma, const IsoType& tau) {
    if (sigma.degree + tau.degree != rho.degree)
        throw input_error("structure constant needs deg sigma + deg tau = deg rho");
    const CompositionVector& d = rho.representative;
    Int total = 0;
    sub_vectors(d, sigma.degree, [&](const CompositionVector& p) {
        if (iso_type(b, p) != sigma.form) return;
        CompositionVector q(d.size());
        for (std::size_t x = 0; x < d.size(); ++x) q[x] = d[x] - p[x];
        if (iso_type(b, q) != tau.form) return;
        Int ways = 1;
        for (std::size_t x = 0; x < d.size(); ++x) ways *= binomial(d[x], p[x]);
        total += ways;
    });
    return total;
}

int AlgebraElement::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [t, c] : coeffs) {
        if (deg >= 0 && t.degree != deg) return -1;
        deg = t.degree;
    }
    return deg;
}

AlgebraElement unit_element(const Blueprint& b) {
    AlgebraElement f{b, {}};
    GradedBasis empty = basis(b, 0);
    f.coeffs.emplace(empty.types.at(0), Rat(1));
    return f;
}

AlgebraElement e1_element(const Blueprint& b) {
    AlgebraElement f{b, {}};
    for (const IsoType& t : basis(b, 1).types) f.coeffs.emplace(t, Rat(1));
    return f;
}

AlgebraElement basis_element(const Blueprint& b, const IsoType& t) {
    AlgebraElement f{b, {}};
    f.coeffs.emplace(t, Rat(1));
    return f;
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
    check_same_blueprint(f.blueprint, g.blueprint);
    AlgebraElement out = f;
    for (const auto& [t, c] : g.coeffs) {
        Rat& slot = out.coeffs[t];
        slot += c;
        if (slot == 0) out.coeffs.erase(t);
    }
    return out;
}

AlgebraElement scale(const Rat& c, const AlgebraElement& f) {
    AlgebraElement out{f.blueprint, {}};
    if (c == 0) return out;
    for (const auto& [t, coeff] : f.coeffs) out.coeffs.emplace(t, coeff * c);
    return out;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) {
    check_same_blueprint(f.blueprint, g.blueprint);
    const Blueprint& b = f.blueprint;
    AlgebraElement out{b, {}};
    std::map<int, GradedBasis> bases;
    for (const auto& [sigma, cf] : f.coeffs)
        for (const auto& [tau, cg] : g.coeffs) {
            int deg = sigma.degree + tau.degree;
            auto it = bases.find(deg);
            if (it == bases.end()) it = bases.emplace(deg, basis(b, deg)).first;
            for (const IsoType& rho : it->second.types) {
                Int c = structure_constant(b, rho, sigma, tau);
                if (c == 0) continue;
                Rat& slot = out.coeffs[rho];
                slot += cf * cg * Rat(c);
                if (slot == 0) out.coeffs.erase(rho);
            }
        }
    return out;
}

Polynomial polynomial_realization(const Blueprint& b, const AlgebraElement& f, int n) {
    check_same_blueprint(f.blueprint, b);
    if (!f.zero() && f.homogeneous_degree() != n)
        throw input_error("realization needs a homogeneous element of the stated degree");
    Polynomial out;
    for (const CompositionVector& d : composition_vectors(b, n)) {
        auto it = f.coeffs.find(IsoType{n, iso_type(b, d), d});
        if (it == f.coeffs.end() || it->second == 0) continue;
        Rat c = it->second;
        for (long e : d) c /= Rat(factorial(e));
        Monomial m(d.begin(), d.end());
        out.emplace(std::move(m), c);
    }
    return out;
}

std::vector<std::vector<Int>> e1_matrix(const Blueprint& b, int n) {
    if (n < 0) throw input_error("degree must be nonnegative");
    GradedBasis rows = basis(b, n + 1);
    GradedBasis cols = basis(b, n);
    std::vector<std::vector<Int>> m(rows.types.size(), std::vector<Int>(cols.types.size(), Int(0)));
    for (std::size_t r = 0; r < rows.types.size(); ++r) {
        const CompositionVector& d = rows.types[r].representative;
        sub_vectors(d, n, [&](const CompositionVector& p) {
            int c = cols.index_of(iso_type(b, p));
            if (c < 0) throw internal_inconsistency("subset type missing from the lower basis");
            Int ways = 1;
            for (std::size_t x = 0; x < d.size(); ++x) ways *= binomial(d[x], p[x]);
            m[r][c] += ways;
        });
    }
    return m;
}

bool e1_full_column_rank(const Blueprint& b, int n) {
    std::vector<std::vector<Int>> m = e1_matrix(b, n);
    std::size_t cols = m.empty() ? 0 : m[0].size();
    return rank_of(std::move(m)) == static_cast<int>(cols);
}

Monomial leading_monomial(const Blueprint& b, const AlgebraElement& f, TermOrder order) {
    int deg = f.homogeneous_degree();
    if (deg < 0) throw input_error("leading monomial needs a nonzero homogeneous element");
    return poly_leading_monomial(polynomial_realization(b, f, deg), order);
}

AddlayerReport addlayer_check(const Blueprint& b, int n_max, TermOrder order) {
    if (n_max < 0) throw input_error("degree bound must be nonnegative");
    int top = n_max + b.block_count();  // largest layer bumps every block

    // leading monomials attainable in each component = pivots of its span
    std::vector<SpanBasis> spans;
    for (int d = 0; d <= top; ++d) {
        spans.emplace_back(order);
        for (const IsoType& t : basis(b, d).types)
            spans[d].insert(polynomial_realization(b, basis_element(b, t), d));
    }

    AddlayerReport rep;
    for (int d = 0; d <= n_max; ++d)
        for (const Monomial& m : spans[d].pivot_monomials()) {
            // group all block indices by their exponent in m
            std::map<long, std::vector<int>> layers;
            for (int x = 0; x < b.block_count(); ++x) layers[m[x]].push_back(x);
            for (const auto& [value, layer] : layers) {
                // a finite block in the layer already at its cardinality: the
                // bump is not realizable and the law claims nothing
                bool saturated = false;
                for (int x : layer)
                    if (!b.blocks()[x].is_infinite() && m[x] == b.blocks()[x].cardinality) saturated = true;
                if (saturated) continue;
                ++rep.checked;
                Monomial target = m;
                for (int x : layer) target[x] += 1;
                int td = d + static_cast<int>(layer.size());
                if (!spans[td].contains_leading(target)) {
                    rep.ok = false;
                    rep.violations.push_back(AddlayerViolation{d, m, layer, target});
                }
            }
        }
    return rep;
}

GenerationReport generated_in_degree(const Blueprint& b, int D, int N) {
    if (D < 1) throw input_error("generator degree bound must be positive");
    if (D > N) throw input_error("generator degree bound must not exceed the probe bound");
    GenerationReport rep;
    rep.generator_bound = D;

    std::vector<std::vector<Polynomial>> gens(D + 1);
    for (int d = 1; d <= D; ++d)
        for (const IsoType& t : basis(b, d).types)
            gens[d].push_back(polynomial_realization(b, basis_element(b, t), d));

    // spans[n] = products of generators totaling n, capacity-truncated
    std::vector<SpanBasis> spans;
    spans.reserve(N + 1);
    for (int n = 0; n <= N; ++n) spans.emplace_back(TermOrder::deglex);
    Monomial one(b.block_count(), 0);
    spans[0].insert(Polynomial{{one, Rat(1)}});

    auto truncate = [&](Polynomial p) {
        for (auto it = p.begin(); it != p.end();) {
            bool over = false;
            for (int x = 0; x < b.block_count(); ++x)
                if (!b.blocks()[x].is_infinite() && it->first[x] > b.blocks()[x].cardinality) over = true;
            it = over ? p.erase(it) : std::next(it);
        }
        return p;
    };

    for (int n = 1; n <= N; ++n) {
        for (int d = 1; d <= std::min(D, n); ++d)
            for (const Polynomial& g : gens[d])
                for (const auto& [pivot, row] : spans[n - d].rows())
                    spans[n].insert(truncate(poly_product(g, row)));
        long dim = static_cast<long>(basis(b, n).types.size());
        rep.rows.push_back(GenerationRow{n, spans[n].dimension(), dim});
        if (rep.first_gap < 0 && spans[n].dimension() < dim) rep.first_gap = n;
    }
    return rep;
}

}
