#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eo/closedform.hpp"

using namespace eo;

TEST_CASE("weight sequence of the inverse series") {
    // quartic: (2n choose n)(3n choose n)/(n+1); general: (2n choose n)^2/(n+1)
    CHECK(omega_weight(Family::Quartic, 0) == Rational(1));
    CHECK(omega_weight(Family::Quartic, 1) == Rational(3));
    CHECK(omega_weight(Family::Quartic, 2) == Rational(30));
    CHECK(omega_weight(Family::Quartic, 3) == Rational(420));
    CHECK(omega_weight(Family::General, 0) == Rational(1));
    CHECK(omega_weight(Family::General, 1) == Rational(2));
    CHECK(omega_weight(Family::General, 2) == Rational(12));
    CHECK(omega_weight(Family::General, 3) == Rational(100));
}

TEST_CASE("R is the compositional inverse of Omega") {
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        USeries direct = series_R(f, 64);
        USeries inv = omega(f, 64).reversion();
        CHECK(direct == inv);
    }
}

TEST_CASE("R has integer coefficients, negative from the quadratic term on") {
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        USeries r = series_R(f, 500);
        CHECK(r.coeff(0).is_zero());
        CHECK(r.coeff(1) == Rational(1));
        bool all_integer = true, all_negative = true;
        for (long n = 2; n <= 500; ++n) {
            all_integer = all_integer && r.coeff(n).is_integer();
            all_negative = all_negative && r.coeff(n) < Rational(0);
        }
        CHECK(all_integer);
        CHECK(all_negative);
    }
}

TEST_CASE("main counting series") {
    USeries q = gf_main(Family::Quartic, 3);
    CHECK(q.coeff(0).is_zero());
    CHECK(q.coeff(1) == Rational(4));
    CHECK(q.coeff(2) == Rational(35));
    CHECK(q.coeff(3) == Rational(402));

    USeries g = gf_main(Family::General, 5);
    CHECK(g.coeff(1) == Rational(1));
    CHECK(g.coeff(2) == Rational(5));
    CHECK(g.coeff(3) == Rational(33));
    CHECK(g.coeff(4) == Rational(252));
    CHECK(g.coeff(5) == Rational(2108));
}

TEST_CASE("binomial convolution identities") {
    SUBCASE("catalan-style expansion") {
        auto rep = check_cat_identity(20);
        CHECK(rep.ok);
        CHECK(rep.residual.is_zero());
    }
    SUBCASE("vandermonde grid") {
        for (long k = 0; k <= 12; ++k)
            for (long n = 0; n <= k; ++n)
                for (long l = 0; l <= 12; ++l) {
                    CAPTURE(k);
                    CAPTURE(l);
                    CAPTURE(n);
                    REQUIRE(check_vandermonde(k, l, n));
                }
    }
}

TEST_CASE("differential equations satisfied to order 50") {
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        CHECK(check_omega_ode(f, 50).is_zero());
        CHECK(check_R_ode(f, 50).is_zero());
    }
}

TEST_CASE("rational form of the positive part") {
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        for (long n = 0; n <= 5; ++n) {
            long jmax = (f == Family::Quartic) ? 2 * n : n + 4;
            for (long j = 0; j <= jmax; ++j) {
                CAPTURE(j);
                CAPTURE(n);
                REQUIRE(ratq_lhs(f, j, n, 12) == ratq_rhs(f, j, n, 12));
            }
        }
    }
}

TEST_CASE("explicit triple carries the counting sequence") {
    ClosedTriple cf = explicit_triple(Family::Quartic, 6, 8);
    CHECK(cf.D.cell(0, 0) == XLaurent(Rational(1)));
    // scaled P cell (1, n+2) holds the n-th counting coefficient
    CHECK(cf.P.cell(1, 2).coeff(0) == Rational(1));
    CHECK(cf.P.cell(1, 3).coeff(0) == Rational(4));
    CHECK(cf.P.cell(1, 4).coeff(0) == Rational(35));
    CHECK(cf.P.cell(1, 5).coeff(0) == Rational(402));

    ClosedTriple cg = explicit_triple(Family::General, 6, 8);
    CHECK(cg.D.cell(0, 0) == XLaurent(Rational(1)));
    CHECK(cg.P.cell(1, 3).coeff(0) == Rational(2) * Rational(1));
    CHECK(cg.P.cell(1, 4).coeff(0) == Rational(2) * Rational(5));
    CHECK(cg.P.cell(1, 5).coeff(0) == Rational(2) * Rational(33));
}
