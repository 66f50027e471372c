#pragma once

#include <string>
#include <vector>

#include "ageal/numbers.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Hilbert-series arithmetic over exact integers and rationals: fitting
// profile prefixes to P(Z) / prod(1 - Z^{n_i}), quasi-polynomial extraction,
// growth-degree estimation, and the numerator-nonnegativity search.
// ---------------------------------------------------------------------------

// integer polynomial, c[i] = coefficient of Z^i, no trailing zeros
struct Poly {
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    Int at(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0); }
    Int eval_one() const;
    bool nonnegative() const;
    void trim();
    std::string text() const;  // human form, e.g. "1 - Z + 2Z^2"

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly one_minus_power(int e);

// φ(0..N); age series start at φ(0) = 1
struct SeriesPrefix {
    std::vector<Int> phi;

    int top() const { return static_cast<int>(phi.size()) - 1; }
    bool non_decreasing() const;

    // validates φ(0) = 1 and entries >= 0
    static SeriesPrefix from_counts(const std::vector<long>& counts);
    static SeriesPrefix from_ints(std::vector<Int> counts);
};

struct RationalForm {
    Poly numerator;
    std::vector<int> denominator_exponents;  // sorted ascending

    friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

// fit failure is a value: a too-short or non-fitting prefix is information,
// not an exception
struct FitResult {
    bool ok = false;
    RationalForm form;
    std::string reason;
};

// denominator (1-Z)(1-Z^2)...(1-Z^k); the last `window` coefficients of the
// numerator-candidate must vanish and P(1) must be nonzero
FitResult fit_rational(const SeriesPrefix& prefix, int k, int window = 5);
// same with an explicit multiset of denominator exponents
FitResult fit_rational(const SeriesPrefix& prefix, std::vector<int> exponents, int window = 5);

// human form, e.g. "(1 - Z + Z^2) / ((1-Z)^2 (1-Z^3))"
std::string form_text(const RationalForm& rf);

// power-series coefficients 0..N of the form
std::vector<Int> expand(const RationalForm& rf, int N);

struct QuasiPolynomial {
    int period = 1;
    int start = 0;  // matches the series from this index on
    // residue_polys[r][j] = coefficient of n^j on the class n = r mod period
    std::vector<std::vector<Rat>> residue_polys;

    int degree() const;
    Rat eval(long n) const;
};

QuasiPolynomial to_quasi_polynomial(const RationalForm& rf);

// least n0 such that qp matches the prefix for all n0 <= n <= N; throws
// input_error when no suffix of length >= period matches
int validate_quasi_polynomial(const QuasiPolynomial& qp, const SeriesPrefix& prefix);

struct GrowthReport {
    bool fitted = false;       // a rational fit certified the degree
    int degree = -1;           // growth exponent k' in a*n^k' <= phi(n) <= b*n^k'
    Rat leading;               // coefficient of n^degree when fitted
    Rat a_low, b_high;         // sandwich constants measured on the tail
    bool unbounded_looking = false;
    std::string note;
};

// fit-based when possible (denominators (1-Z)...(1-Z^k), k <= 8), otherwise
// an empirical slope estimate flagged as such
GrowthReport growth_degree(const SeriesPrefix& prefix);

struct NonnegSearchResult {
    bool found = false;
    std::vector<int> exponents;
    Poly numerator;
    int bound = 0;
    std::string base_reason;  // set when no base fit existed
};

// scan multisets {n1 <= ... <= nk} <= bound in lexicographic order; numerator
// candidates come from exact polynomial division against one base fit, so a
// short prefix cannot fake nonnegativity
NonnegSearchResult numerator_nonneg_search(const SeriesPrefix& prefix, int k, int exponent_bound);

struct BoundedCertificate {
    bool bounded = false;
    Poly numerator;       // over (1 - Z); entries nonnegative
    int stable_from = -1; // first index of the constant tail
};

// eventually-constant test with at least 3 guard terms; the numerator
// coefficients are the profile increments, nonnegative for age series
BoundedCertificate bounded_profile_certificate(const SeriesPrefix& prefix);

}
