#include "ageal/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ageal/errors.hpp"

namespace ageal {

Int Poly::eval_one() const {
    Int s = 0;
    for (const Int& x : c) s += x;
    return s;
}

bool Poly::nonnegative() const {
    for (const Int& x : c)
        if (x < 0) return false;
    return true;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string Poly::text() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = a < 0 ? Int(-a) : a;
        if (mag != 1 || i == 0) os << mag.str();
        if (i == 1) os << "Z";
        if (i > 1) os << "Z^" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

Poly one_minus_power(int e) {
    if (e < 1) throw input_error("denominator exponent must be positive");
    Poly p;
    p.c.assign(e + 1, Int(0));
    p.c[0] = 1;
    p.c[e] = -1;
    return p;
}

bool SeriesPrefix::non_decreasing() const {
    for (std::size_t i = 1; i < phi.size(); ++i)
        if (phi[i] < phi[i - 1]) return false;
    return true;
}

SeriesPrefix SeriesPrefix::from_counts(const std::vector<long>& counts) {
    std::vector<Int> v(counts.begin(), counts.end());
    return from_ints(std::move(v));
}

SeriesPrefix SeriesPrefix::from_ints(std::vector<Int> counts) {
    if (counts.empty()) throw input_error("series prefix must be nonempty");
    if (counts[0] != 1) throw input_error("series prefix must start with 1");
    for (const Int& x : counts)
        if (x < 0) throw input_error("series prefix entries must be nonnegative");
    return SeriesPrefix{std::move(counts)};
}

namespace {

FitResult fit_with_exponents(const SeriesPrefix& prefix, std::vector<int> exponents, int window) {
    FitResult res;
    if (window < 1) throw input_error("fit window must be positive");
    if (exponents.empty()) throw input_error("fit needs at least one denominator exponent");
    std::sort(exponents.begin(), exponents.end());
    long need = window;
    for (int e : exponents) {
        if (e < 1) throw input_error("denominator exponent must be positive");
        need += e;
    }
    int N = prefix.top();
    if (!prefix.non_decreasing()) {
        res.reason = "prefix is not non-decreasing, not an age series";
        return res;
    }
    if (N < need) {
        std::ostringstream os;
        os << "prefix too short: need phi(0.." << need << "), have phi(0.." << N << ")";
        res.reason = os.str();
        return res;
    }
    // candidate numerator = prefix * prod (1 - Z^e), truncated at N
    std::vector<Int> p(prefix.phi);
    for (int e : exponents) {
        // multiply by (1 - Z^e) in place, high to low
        for (int i = N; i >= e; --i) p[i] -= p[i - e];
    }
    for (int i = N - window + 1; i <= N; ++i)
        if (p[i] != 0) {
            res.reason = "prefix does not match the form: numerator window is not zero";
            return res;
        }
    Poly num;
    num.c.assign(p.begin(), p.begin() + (N - window + 1));
    num.trim();
    if (num.eval_one() == 0) {
        res.reason = "numerator vanishes at Z=1, denominator exponent count too high";
        return res;
    }
    res.ok = true;
    res.form = RationalForm{std::move(num), std::move(exponents)};
    return res;
}

}  // namespace

FitResult fit_rational(const SeriesPrefix& prefix, int k, int window) {
    if (k < 1) throw input_error("fit needs k >= 1");
    std::vector<int> exps(k);
    std::iota(exps.begin(), exps.end(), 1);
    return fit_with_exponents(prefix, std::move(exps), window);
}

FitResult fit_rational(const SeriesPrefix& prefix, std::vector<int> exponents, int window) {
    return fit_with_exponents(prefix, std::move(exponents), window);
}

std::string form_text(const RationalForm& rf) {
    std::ostringstream os;
    os << "(" << rf.numerator.text() << ") / (";
    std::map<int, int> multiplicity;
    for (int e : rf.denominator_exponents) ++multiplicity[e];
    bool first = true;
    for (const auto& [e, count] : multiplicity) {
        if (!first) os << " ";
        os << "(1-Z";
        if (e > 1) os << "^" << e;
        os << ")";
        if (count > 1) os << "^" << count;
        first = false;
    }
    if (first) os << "1";
    os << ")";
    return os.str();
}

std::vector<Int> expand(const RationalForm& rf, int N) {
    if (N < 0) throw input_error("expansion length must be nonnegative");
    std::vector<Int> u(N + 1, Int(0));
    for (int i = 0; i <= std::min(N, rf.numerator.degree()); ++i) u[i] = rf.numerator.c[i];
    for (int e : rf.denominator_exponents) {
        if (e < 1) throw input_error("denominator exponent must be positive");
        for (int i = e; i <= N; ++i) u[i] += u[i - e];
    }
    return u;
}

int QuasiPolynomial::degree() const {
    int d = -1;
    for (const auto& poly : residue_polys)
        for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j)
            if (poly[j] != 0) {
                d = std::max(d, j);
                break;
            }
    return d;
}

Rat QuasiPolynomial::eval(long n) const {
    if (n < 0) throw input_error("quasi-polynomial evaluated at negative index");
    const std::vector<Rat>& poly = residue_polys[n % period];
    Rat v = 0;
    Rat pw = 1;
    for (const Rat& coeff : poly) {
        v += coeff * pw;
        pw *= n;
    }
    return v;
}

QuasiPolynomial to_quasi_polynomial(const RationalForm& rf) {
    int period = 1;
    long sum = 0;
    for (int e : rf.denominator_exponents) {
        period = static_cast<int>(std::lcm(period, e));
        sum += e;
    }
    int k = static_cast<int>(rf.denominator_exponents.size());
    long start = std::max<long>(0, rf.numerator.degree() - sum + 1);

    // per residue class, interpolate a polynomial of degree <= k-1 through k
    // sample points, then verify on a second batch
    long samples_top = start + static_cast<long>(period) * (2 * k);
    std::vector<Int> coeffs = expand(rf, static_cast<int>(samples_top));

    QuasiPolynomial qp;
    qp.period = period;
    qp.start = static_cast<int>(start);
    qp.residue_polys.assign(period, {});
    for (int r = 0; r < period; ++r) {
        long first = start + ((r - start) % period + period) % period;
        std::vector<Rat> xs, ys;
        for (int j = 0; j < k; ++j) {
            long n = first + static_cast<long>(j) * period;
            xs.push_back(Rat(n));
            ys.push_back(Rat(coeffs[n]));
        }
        // Newton form, then expand to monomial coefficients
        std::vector<Rat> divided(ys);
        for (int level = 1; level < k; ++level)
            for (int i = k - 1; i >= level; --i)
                divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
        std::vector<Rat> poly(k, Rat(0));
        std::vector<Rat> basis{Rat(1)};  // product (x - xs[0])...(x - xs[level-1])
        for (int level = 0; level < k; ++level) {
            for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += divided[level] * basis[j];
            if (level + 1 < k) {
                basis.push_back(Rat(0));
                for (int j = static_cast<int>(basis.size()) - 1; j > 0; --j)
                    basis[j] = basis[j - 1] - xs[level] * basis[j];
                basis[0] = -xs[level] * basis[0];
            }
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        qp.residue_polys[r] = std::move(poly);
        for (int j = k; j < 2 * k; ++j) {
            long n = first + static_cast<long>(j) * period;
            if (qp.eval(n) != Rat(coeffs[n]))
                throw internal_inconsistency("quasi-polynomial interpolation failed verification");
        }
    }
    return qp;
}

int validate_quasi_polynomial(const QuasiPolynomial& qp, const SeriesPrefix& prefix) {
    int N = prefix.top();
    int bad = -1;  // last index where the match fails
    for (int n = N; n >= 0; --n)
        if (qp.eval(n) != Rat(prefix.phi[n])) {
            bad = n;
            break;
        }
    int n0 = bad + 1;
    if (N - n0 + 1 < qp.period) throw input_error("quasi-polynomial does not match a full period of the prefix");
    return n0;
}

GrowthReport growth_degree(const SeriesPrefix& prefix) {
    int N = prefix.top();
    GrowthReport rep;
    if (N < 8) {
        rep.note = "prefix too short for a growth estimate (need 8 terms past phi(0))";
        return rep;
    }
    if (!prefix.non_decreasing()) {
        rep.unbounded_looking = false;
        rep.note = "prefix is not non-decreasing, not an age series";
        return rep;
    }
    for (int k = 1; k <= 8; ++k) {
        FitResult fit = fit_rational(prefix, k, 5);
        if (!fit.ok) continue;
        QuasiPolynomial qp = to_quasi_polynomial(fit.form);
        rep.fitted = true;
        rep.degree = std::max(qp.degree(), 0);
        // top coefficient is shared across residue classes when P(1) != 0
        for (const auto& poly : qp.residue_polys)
            if (static_cast<int>(poly.size()) == rep.degree + 1) {
                rep.leading = poly[rep.degree];
                break;
            }
        break;
    }
    if (!rep.fitted) {
        // no rational certificate; estimate the slope on a doubling window
        Rat lo(prefix.phi[N / 2]), hi(prefix.phi[N]);
        int d = 0;
        Rat ratio = lo == 0 ? Rat(0) : hi / lo;
        Rat power(1);
        Rat base = Rat(N) / Rat(N / 2);
        while (d < 16 && power < ratio) {
            power *= base;
            ++d;
        }
        rep.degree = d;
        rep.unbounded_looking = d > 8;
        rep.note = "no rational fit with k <= 8; degree is an empirical slope estimate";
    }
    // sandwich constants on the tail (n >= max(1, N/2))
    Rat a_low, b_high;
    bool first = true;
    for (int n = std::max(1, N / 2); n <= N; ++n) {
        Rat nd(1);
        for (int j = 0; j < rep.degree; ++j) nd *= n;
        Rat q = Rat(prefix.phi[n]) / nd;
        if (first || q < a_low) a_low = q;
        if (first || q > b_high) b_high = q;
        first = false;
    }
    rep.a_low = a_low;
    rep.b_high = b_high;
    return rep;
}

namespace {

// quotient of a*b0 / divisor when the division is exact; false otherwise
bool exact_div(const Poly& numerator, const Poly& divisor, Poly& quotient) {
    if (divisor.c.empty()) throw input_error("division by the zero polynomial");
    Poly rem = numerator;
    quotient.c.assign(std::max<std::size_t>(numerator.c.size(), 1), Int(0));
    int dd = divisor.degree();
    const Int& lead = divisor.c[dd];
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Int q = rem.c[rem.degree()] / lead;
        if (q * lead != rem.c[rem.degree()]) return false;
        quotient.c[shift] += q;
        for (int i = 0; i <= dd; ++i) rem.c[shift + i] -= q * divisor.c[i];
        rem.trim();
    }
    quotient.trim();
    return rem.c.empty();
}

}  // namespace

NonnegSearchResult numerator_nonneg_search(const SeriesPrefix& prefix, int k, int exponent_bound) {
    if (k < 1) throw input_error("search needs k >= 1");
    if (exponent_bound < 1) throw input_error("exponent bound must be positive");
    NonnegSearchResult res;
    res.bound = exponent_bound;

    FitResult base = fit_rational(prefix, k, 5);
    if (!base.ok) {
        res.base_reason = base.reason;
        return res;
    }
    Poly base_den{{Int(1)}};
    for (int e : base.form.denominator_exponents) base_den = poly_mul(base_den, one_minus_power(e));

    // multisets n1 <= ... <= nk in lexicographic order
    std::vector<int> exps(k, 1);
    while (true) {
        Poly cand{{Int(1)}};
        for (int e : exps) cand = poly_mul(cand, one_minus_power(e));
        cand = poly_mul(cand, base.form.numerator);
        Poly p;
        if (exact_div(cand, base_den, p) && p.nonnegative() && p.eval_one() != 0) {
            res.found = true;
            res.exponents = exps;
            res.numerator = std::move(p);
            return res;
        }
        int i = k - 1;
        while (i >= 0 && exps[i] == exponent_bound) --i;
        if (i < 0) break;
        ++exps[i];
        for (int j = i + 1; j < k; ++j) exps[j] = exps[i];
    }
    return res;
}

BoundedCertificate bounded_profile_certificate(const SeriesPrefix& prefix) {
    BoundedCertificate cert;
    if (!prefix.non_decreasing()) return cert;
    int N = prefix.top();
    int m = N;
    while (m > 0 && prefix.phi[m - 1] == prefix.phi[N]) --m;
    if (N - m < 3) return cert;  // not enough stable evidence
    cert.bounded = true;
    cert.stable_from = m;
    cert.numerator.c.assign(m + 1, Int(0));
    for (int i = 0; i <= m; ++i) cert.numerator.c[i] = prefix.phi[i] - (i > 0 ? prefix.phi[i - 1] : Int(0));
    cert.numerator.trim();
    return cert;
}

}
