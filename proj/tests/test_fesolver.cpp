#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eo/closedform.hpp"
#include "eo/fesolver.hpp"
#include "eo/serialize.hpp"

using namespace eo;

TEST_CASE("quartic system reproduces the counting sequence") {
    FESystem sys = FESystem::solve(SystemKind::Quartic, 5);
    USeries q = sys.extract_Q();
    REQUIRE(q.order() == 4);
    CHECK(q.coeff(0).is_zero());
    CHECK(q.coeff(1) == Rational(4));
    CHECK(q.coeff(2) == Rational(35));
    CHECK(q.coeff(3) == Rational(402));
    USeries closed = gf_main(Family::Quartic, 4);
    CHECK(q.coeff(4) == closed.coeff(4));
}

TEST_CASE("colourful system counts twice the general sequence") {
    FESystem sys = FESystem::solve(SystemKind::Colourful, 5);
    USeries q = sys.extract_Q();
    REQUIRE(q.order() == 4);
    CHECK(q.coeff(1) == Rational(2));
    CHECK(q.coeff(2) == Rational(10));
    CHECK(q.coeff(3) == Rational(66));
    USeries closed = gf_main(Family::General, 4);
    for (long n = 0; n <= 4; ++n) CHECK(q.coeff(n) == Rational(2) * closed.coeff(n));
}

TEST_CASE("degenerate truncation levels") {
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        CAPTURE(system_name(kind));
        FESystem sys = FESystem::solve(kind, 0);
        CHECK(sys.p(0, 0) == Rational(1)); // the atomic patch
        CHECK_THROWS_AS((void)sys.extract_Q(), std::domain_error);
    }
}

TEST_CASE("initial column of D is trivial") {
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        CAPTURE(system_name(kind));
        FESystem sys = FESystem::solve(kind, 4);
        CHECK(sys.d(0, 0) == XLaurent(Rational(1)));
        for (long n = 1; n <= 4; ++n) CHECK(sys.d(0, n).is_zero());
    }
}

TEST_CASE("every defining equation holds on the finished tables") {
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        CAPTURE(system_name(kind));
        FESystem sys = FESystem::solve(kind, 4);
        CHECK_NOTHROW(sys.verify_residuals());
    }
}

TEST_CASE("published tables do not depend on the window") {
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        CAPTURE(system_name(kind));
        FESystem base = FESystem::solve(kind, 3);
        FESystem wide = FESystem::solve(kind, 3, base.window() + 7);
        SolvedTriple a = base.published(), b = wide.published();
        CHECK(a.P == b.P);
        CHECK(a.C == b.C);
        CHECK(a.D == b.D);
        CHECK(a.x_out == b.x_out);
    }
}

TEST_CASE("solver tables equal the closed-form triple") {
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        CAPTURE(system_name(kind));
        Family f = kind == SystemKind::Quartic ? Family::Quartic : Family::General;
        FESystem sys = FESystem::solve(kind, 6);
        ClosedTriple cf = explicit_triple(f, 8, sys.x_out());
        CrossReport rep = sys.cross_validate(cf);
        CAPTURE(rep.first_mismatch);
        CHECK(rep.identical);
        CHECK(rep.cells_compared > 0);
    }
}

TEST_CASE("published triple survives serialization") {
    FESystem sys = FESystem::solve(SystemKind::Quartic, 3);
    SolvedTriple tr = sys.published();
    CHECK(totalseries_from_json(to_json(tr.P)) == tr.P);
    CHECK(totalseries_from_json(to_json(tr.C)) == tr.C);
    CHECK(totalseries_from_json(to_json(tr.D)) == tr.D);
}
