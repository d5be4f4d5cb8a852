#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eo/serialize.hpp"
#include "eo/totalseries.hpp"
#include "eo/uniseries.hpp"
#include "eo/xlaurent.hpp"

using namespace eo;

namespace {

USeries sample_series(long order, long seed) {
    USeries s(order);
    for (long k = 0; k <= order; ++k)
        s.set_coeff(k, Rational((seed * (k + 3)) % 11 - 5, (k % 4) + 1));
    return s;
}

} // namespace

TEST_CASE("rational arithmetic and normalization") {
    Rational a(6, 4), b(-3, 2);
    CHECK(a == Rational(3, 2));
    CHECK((a + b).is_zero());
    CHECK(a * Rational(2, 3) == Rational(1));
    CHECK(Rational(7, -14) == Rational(-1, 2));
    CHECK(Rational(10, 5).is_integer());
    CHECK_FALSE(Rational(10, 4).is_integer());
    CHECK(Rational(10, 4).to_string() == "5/2");
    CHECK(Rational("22/7") == Rational(22, 7));
    CHECK(Rational(-5).numerator() == Integer(-5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("integer arithmetic") {
    Integer big("123456789012345678901234567890");
    CHECK(big + Integer(1) - Integer(1) == big);
    CHECK(big * Integer(0) == Integer(0));
    CHECK(Integer(-7) < Integer(3));
    CHECK(big.to_string() == "123456789012345678901234567890");
}

TEST_CASE("series ring operations") {
    USeries a = sample_series(12, 3), b = sample_series(12, 7), c = sample_series(12, 5);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a - a == USeries(12));
    CHECK(Rational(2) * a == a + a);

    SUBCASE("truncation to the shorter operand") {
        USeries shorter = sample_series(5, 2);
        CHECK((a * shorter).order() == 5);
    }
    SUBCASE("reciprocal and division") {
        USeries u = sample_series(10, 4);
        u.set_coeff(0, Rational(2));
        USeries one = USeries::monomial(0, 10);
        CHECK(u * u.reciprocal() == one);
        CHECK((a.truncated(10) * u) / u == a.truncated(10));
    }
    SUBCASE("derivative and integral") {
        USeries di = a.derivative().integral();
        di.set_coeff(0, a.coeff(0));
        CHECK(di == a);
    }
}

TEST_CASE("valuation and monomials") {
    USeries m = USeries::monomial(3, 8, Rational(5));
    CHECK(m.valuation() == 3);
    CHECK(m.coeff(3) == Rational(5));
    CHECK(USeries(8).valuation() == 9); // zero series: one past the order
    CHECK(USeries::identity(4).valuation() == 1);
}

TEST_CASE("exp and log invert each other") {
    USeries v = sample_series(14, 9);
    v.set_coeff(0, Rational(0));
    USeries e = v.exp_series();
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.log_series() == v);

    USeries w = sample_series(14, 11);
    w.set_coeff(0, Rational(1));
    CHECK(w.log_series().exp_series() == w);
}

TEST_CASE("compose matches direct substitution") {
    // f(g) for f = 1 + t + t^2 and small g with valuation 1
    USeries f(6);
    f.set_coeff(0, Rational(1));
    f.set_coeff(1, Rational(1));
    f.set_coeff(2, Rational(1));
    USeries g(6);
    g.set_coeff(1, Rational(2));
    g.set_coeff(3, Rational(-1));
    USeries direct = USeries::monomial(0, 6) + g + g * g;
    CHECK(f.compose(g) == direct);
}

TEST_CASE("reversion is the compositional inverse") {
    USeries f = sample_series(12, 8);
    f.set_coeff(0, Rational(0));
    f.set_coeff(1, Rational(1)); // valuation exactly 1
    USeries g = f.reversion();
    CHECK(f.compose(g) == USeries::identity(12));
    CHECK(g.compose(f) == USeries::identity(12));
    for (long n = 1; n <= 12; ++n) CHECK(g.coeff(n) == lagrange_reversion_coeff(f, n));
}

TEST_CASE("laurent polynomial support and arithmetic") {
    XLaurent p = XLaurent::term(-2, Rational(3)) + XLaurent::term(1, Rational(-1));
    CHECK(p.lo() == -2);
    CHECK(p.hi() == 1);
    CHECK(p.coeff(-2) == Rational(3));
    CHECK(p.coeff(0) == Rational(0));
    CHECK(p.coeff(100) == Rational(0)); // reads outside the support are zero

    XLaurent q = XLaurent::term(2, Rational(1));
    CHECK((p * q).lo() == 0);
    CHECK((p * q).coeff(3) == Rational(-1));

    p.add_term(1, Rational(1)); // cancels the top term
    CHECK(p.hi() == -2);

    XLaurent z = XLaurent::term(0, Rational(1)) - XLaurent::term(0, Rational(1));
    CHECK(z.is_zero());
    CHECK(z.degree() == XLaurent::kZeroDegree);
}

TEST_CASE("total-degree truncated bivariate series") {
    TotalSeries a(3);
    a.cell(0, 0) = XLaurent(Rational(1));
    a.cell(1, 0) = XLaurent::term(-1, Rational(2)); // y x^-1
    a.cell(0, 1) = XLaurent::term(1, Rational(1));  // t x
    TotalSeries sq = a * a;
    CHECK(sq.cell(0, 0) == XLaurent(Rational(1)));
    CHECK(sq.cell(1, 0) == XLaurent::term(-1, Rational(4)));
    CHECK(sq.cell(1, 1) == XLaurent::term(0, Rational(4))); // cross term 2*2*x^-1*x
    CHECK(sq.cell(2, 0) == XLaurent::term(-2, Rational(4)));
    CHECK(sq.cell_or_zero(5, 5).is_zero());
    CHECK_THROWS_AS((void)a.cell(2, 2), std::out_of_range);
}

TEST_CASE("json round trips") {
    USeries s = sample_series(9, 6);
    CHECK(useries_from_json(to_json(s)) == s);

    TotalSeries ts(2);
    ts.cell(0, 0) = XLaurent(Rational(1, 3));
    ts.cell(1, 1) = XLaurent::term(-4, Rational(7, 2)) + XLaurent::term(2, Rational(-1));
    CHECK(totalseries_from_json(to_json(ts)) == ts);

    // string coefficients survive exactly
    auto j = to_json(ts);
    CHECK(j["entries"][1]["x"][0][1] == "7/2");
}
