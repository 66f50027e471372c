#pragma once

#include <string>
#include <vector>

#include "ageal/blueprint.hpp"
#include "ageal/numbers.hpp"
#include "ageal/polynomials.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// The truncated graded age algebra of a blueprint.  Basis elements are
// isomorphism types of n-element substructures; the product counts, for a
// substructure Q of type rho, the ways to split Q into a piece of type sigma
// and a complement of type tau.
// ---------------------------------------------------------------------------

struct IsoType {
    int degree = 0;
    CanonicalForm form;
    CompositionVector representative;  // lexicographically least vector of the class

    friend bool operator==(const IsoType& a, const IsoType& b) { return a.degree == b.degree && a.form == b.form; }
};

struct IsoTypeLess {
    bool operator()(const IsoType& a, const IsoType& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.form < b.form;
    }
};

struct GradedBasis {
    int degree = 0;
    std::vector<IsoType> types;  // ordered by canonical form bytes

    int index_of(const CanonicalForm& form) const;  // -1 when absent
};

GradedBasis basis(const Blueprint& b, int n);

// number of ways a set of type rho splits into a subset of type sigma with
// complement of type tau: sum over p <= d, |p| = deg sigma, type(p) = sigma,
// type(d-p) = tau of prod_x C(d_x, p_x), computed at d = rho's representative
Int structure_constant(const Blueprint& b, const IsoType& rho, const IsoType& sigma, const IsoType& tau);

struct AlgebraElement {
    Blueprint blueprint;
    std::map<IsoType, Rat, IsoTypeLess> coeffs;

    bool zero() const { return coeffs.empty(); }
    // degree when homogeneous; -1 for 0 or mixed
    int homogeneous_degree() const;
};

AlgebraElement unit_element(const Blueprint& b);           // empty type, coefficient 1
AlgebraElement e1_element(const Blueprint& b);             // sum of the degree-1 types
AlgebraElement basis_element(const Blueprint& b, const IsoType& t);
AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const Rat& c, const AlgebraElement& f);
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

// image of f in K[X] under the divided-power realization
//   u_sigma  |->  sum over capacity d, type(d) = sigma  of  X^d / prod(d_x!)
// the 1/d! normalization is what makes the realization multiplicative
// modulo the ideal of capacity-violating monomials
Polynomial polynomial_realization(const Blueprint& b, const AlgebraElement& f, int n);

// entry(rho, sigma) = number of degree-n subsets of type sigma inside a set
// of type rho; this is the matrix of multiplication by e1 from degree n to
// degree n+1, and it has full column rank over the age of an infinite
// structure
std::vector<std::vector<Int>> e1_matrix(const Blueprint& b, int n);
bool e1_full_column_rank(const Blueprint& b, int n);

Monomial leading_monomial(const Blueprint& b, const AlgebraElement& f, TermOrder order = TermOrder::deglex);

struct AddlayerViolation {
    int degree = 0;
    Monomial source;
    std::vector<int> layer;
    Monomial target;
};

struct AddlayerReport {
    bool ok = true;
    long checked = 0;
    std::vector<AddlayerViolation> violations;
};

// for every leading monomial m of a component of degree <= n_max and every
// layer of m (a maximal set of block indices sharing one exponent value in
// m), bumping the whole layer by one must land on a leading monomial of the
// target component, unless the layer holds a finite block already at its
// cardinality; violations are reported, never asserted
AddlayerReport addlayer_check(const Blueprint& b, int n_max, TermOrder order = TermOrder::deglex);

struct GenerationRow {
    int degree = 0;
    long spanned = 0;
    long dimension = 0;
};

struct GenerationReport {
    int generator_bound = 0;
    std::vector<GenerationRow> rows;
    int first_gap = -1;  // least degree with spanned < dimension
};

// dimension of the span of all products of basis elements of degrees <= D
// inside each realized component of degree n <= N, versus the profile
GenerationReport generated_in_degree(const Blueprint& b, int D, int N);

}
