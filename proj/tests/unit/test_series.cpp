#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ageal/builtins.hpp"
#include "ageal/errors.hpp"
#include "ageal/series.hpp"
#include "doctest.h"

using namespace ageal;

namespace {

SeriesPrefix prefix_of(const char* name, int N) {
    return SeriesPrefix::from_counts(profile_prefix(builtin_blueprint(name), N));
}

}  // namespace

TEST_CASE("polynomial basics") {
    Poly p;
    p.c = {Int(1), Int(-1), Int(1)};
    CHECK(p.degree() == 2);
    CHECK(p.eval_one() == 1);
    CHECK_FALSE(p.nonnegative());
    CHECK(p.text() == "1 - Z + Z^2");
    Poly q = one_minus_power(3);
    CHECK(q.c == std::vector<Int>{Int(1), Int(0), Int(0), Int(-1)});
    Poly prod = poly_mul(p, q);
    CHECK(prod.degree() == 5);
    CHECK(prod.eval_one() == 0);
}

TEST_CASE("series prefixes validate") {
    CHECK_THROWS_AS(SeriesPrefix::from_counts({2, 1}), input_error);   // phi(0) != 1
    CHECK_THROWS_AS(SeriesPrefix::from_counts({1, -1}), input_error);  // negative count
    SeriesPrefix p = SeriesPrefix::from_counts({1, 1, 2});
    CHECK(p.top() == 2);
    CHECK(p.non_decreasing());
    CHECK_FALSE(SeriesPrefix::from_counts({1, 2, 1}).non_decreasing());
}

TEST_CASE("rational fits recover the two displayed forms of the two-block reference") {
    SeriesPrefix cpc = prefix_of("clique-plus-coclique", 20);
    FitResult power = fit_rational(cpc, std::vector<int>{1, 1});
    REQUIRE(power.ok);
    CHECK(power.form.numerator.c == std::vector<Int>{Int(1), Int(-1), Int(1)});
    CHECK(form_text(power.form) == "(1 - Z + Z^2) / ((1-Z)^2)");

    FitResult staircase = fit_rational(cpc, 2);
    REQUIRE(staircase.ok);
    CHECK(staircase.form.numerator.c == std::vector<Int>{Int(1), Int(0), Int(0), Int(1)});
    CHECK(form_text(staircase.form) == "(1 + Z^3) / ((1-Z) (1-Z^2))");

    // both forms expand back to the prefix exactly
    CHECK(expand(power.form, 20) == cpc.phi);
    CHECK(expand(staircase.form, 20) == cpc.phi);
}

TEST_CASE("fit failures carry reasons") {
    SeriesPrefix tiny = SeriesPrefix::from_counts({1, 1, 2});
    CHECK_FALSE(fit_rational(tiny, 3).ok);
    CHECK_FALSE(fit_rational(tiny, 3).reason.empty());
    // a prefix that is not eventually polynomial of the claimed shape
    SeriesPrefix c3 = prefix_of("c3-chains", 14);
    FitResult wrong = fit_rational(c3, std::vector<int>{1, 1, 1});
    CHECK_FALSE(wrong.ok);
    // P(1) = 0 candidates are rejected rather than reported as k-dimensional
    SeriesPrefix bounded = prefix_of("chain", 12);
    FitResult k1 = fit_rational(bounded, 1);
    REQUIRE(k1.ok);
    CHECK(k1.form.numerator.c == std::vector<Int>{Int(1)});
}

TEST_CASE("quasi-polynomials match their series") {
    FitResult fit = fit_rational(prefix_of("clique-plus-coclique", 20), 2);
    REQUIRE(fit.ok);
    QuasiPolynomial qp = to_quasi_polynomial(fit.form);
    CHECK(qp.period == 2);
    CHECK(qp.degree() == 1);
    CHECK(qp.eval(7) == Rat(7));
    CHECK(qp.eval(12) == Rat(12));
    CHECK(validate_quasi_polynomial(qp, prefix_of("clique-plus-coclique", 20)) == 1);

    FitResult c3 = fit_rational(prefix_of("c3-chains", 16), 3);
    REQUIRE(c3.ok);
    QuasiPolynomial qp3 = to_quasi_polynomial(c3.form);
    CHECK(qp3.degree() == 2);
    int n0 = validate_quasi_polynomial(qp3, prefix_of("c3-chains", 16));
    SeriesPrefix long_prefix = prefix_of("c3-chains", 18);
    for (int n = n0; n <= 18; ++n) CHECK(qp3.eval(n) == Rat(long_prefix.phi[n]));
}

TEST_CASE("validation rejects a non-matching quasi-polynomial") {
    FitResult fit = fit_rational(prefix_of("clique-plus-coclique", 14), 2);
    REQUIRE(fit.ok);
    QuasiPolynomial qp = to_quasi_polynomial(fit.form);
    CHECK_THROWS_AS(validate_quasi_polynomial(qp, prefix_of("c3-chains", 14)), input_error);
}

TEST_CASE("growth degrees") {
    GrowthReport linear = growth_degree(prefix_of("clique-plus-coclique", 16));
    CHECK(linear.fitted);
    CHECK(linear.degree == 1);
    CHECK(linear.leading == Rat(1));

    GrowthReport quadratic = growth_degree(prefix_of("c3-chains", 16));
    CHECK(quadratic.fitted);
    CHECK(quadratic.degree == 2);
    CHECK(quadratic.leading == Rat(1, 6));

    GrowthReport flat = growth_degree(prefix_of("chain", 12));
    CHECK(flat.fitted);
    CHECK(flat.degree == 0);

    GrowthReport none = growth_degree(SeriesPrefix::from_counts({1, 1, 2}));
    CHECK_FALSE(none.fitted);
    CHECK_FALSE(none.note.empty());
}

TEST_CASE("nonnegative numerator search") {
    NonnegSearchResult cpc = numerator_nonneg_search(prefix_of("clique-plus-coclique", 20), 2, 8);
    REQUIRE(cpc.found);
    CHECK(cpc.exponents == std::vector<int>{1, 2});
    CHECK(cpc.numerator.c == std::vector<Int>{Int(1), Int(0), Int(0), Int(1)});
    CHECK(cpc.numerator.nonnegative());
}

TEST_CASE("bounded profiles get certificates") {
    BoundedCertificate chain = bounded_profile_certificate(prefix_of("chain", 12));
    CHECK(chain.bounded);
    CHECK(chain.numerator.nonnegative());
    CHECK(chain.stable_from == 0);
    BoundedCertificate growing = bounded_profile_certificate(prefix_of("c3-chains", 12));
    CHECK_FALSE(growing.bounded);
}
