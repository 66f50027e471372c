#pragma once

#include <map>
#include <vector>

#include "ageal/numbers.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// Sparse exact polynomials in finitely many variables, term orders, and
// incremental span bases used by the generation probes and the leading
// monomial machinery.
// ---------------------------------------------------------------------------

// exponent vector; all monomials of one computation share a length
using Monomial = std::vector<long>;

enum class TermOrder { deglex, lex, degrevlex };

// strict a > b in the given order; variables are ordered by index, x0 largest
bool monomial_greater(const Monomial& a, const Monomial& b, TermOrder order);

struct MonomialGreater {
    TermOrder order = TermOrder::deglex;
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_greater(a, b, order); }
};

// monomial -> coefficient; zero coefficients never stored
using Polynomial = std::map<Monomial, Rat>;

void poly_add_scaled(Polynomial& into, const Polynomial& p, const Rat& scale);
Polynomial poly_product(const Polynomial& a, const Polynomial& b);
// largest monomial with nonzero coefficient; throws input_error on zero
Monomial poly_leading_monomial(const Polynomial& p, TermOrder order);

// row space built one polynomial at a time by exact Gaussian elimination;
// pivot monomials are exactly the leading monomials attainable in the space
class SpanBasis {
public:
    explicit SpanBasis(TermOrder order) : cmp_{order}, rows_(cmp_) {}

    // reduce p against the stored rows; store the remainder if nonzero;
    // true when the dimension grew
    bool insert(Polynomial p);

    int dimension() const { return static_cast<int>(rows_.size()); }
    bool contains_leading(const Monomial& m) const { return rows_.count(m) > 0; }
    std::vector<Monomial> pivot_monomials() const;
    const std::map<Monomial, Polynomial, MonomialGreater>& rows() const { return rows_; }
    TermOrder order() const { return cmp_.order; }

private:
    MonomialGreater cmp_;
    std::map<Monomial, Polynomial, MonomialGreater> rows_;  // pivot -> row, row normalized monic
};

// rank of an integer matrix by fraction-free (Bareiss) elimination
int rank_of(std::vector<std::vector<Int>> m);

}
