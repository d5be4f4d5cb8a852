#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "eo/asym.hpp"

using namespace eo;

namespace {

Real pow10_neg(long k, long prec) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r = r / Rational(10);
    return Real(r, prec);
}

} // namespace

TEST_CASE("arbitrary precision real plumbing") {
    const long prec = 256;
    Real two(2, prec);
    Real s = two.sqrt();
    CHECK((s * s - two).abs() < pow10_neg(70, prec));
    CHECK(Real::pi(prec).to_double() == doctest::Approx(3.14159265358979));
    CHECK(Real(Rational(1, 3), prec).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK(Real(-5, prec).abs().to_double() == doctest::Approx(5.0));
    // serialization is deterministic
    CHECK(Real::pi(prec).to_string(10) == Real::pi(prec).to_string(10));
    CHECK(Real::pi(prec).to_string(10).substr(0, 11) == "3.141592654");
}

TEST_CASE("growth rate times radius is one") {
    const long prec = 512;
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        AsymConstants a = constants(f, prec);
        CHECK((a.mu * a.rho - Real(1, prec)).abs() < pow10_neg(100, prec));
    }
}

TEST_CASE("radius formulas agree with the six-vertex specializations") {
    const long prec = 512;
    AsymConstants q = constants(Family::Quartic, prec);
    Real q_endpoint = six_vertex_radius_lambda(Rational(2, 3), prec);
    CHECK((q.rho - q_endpoint).abs() < q.rho * pow10_neg(50, prec));

    AsymConstants g = constants(Family::General, prec);
    Real g_endpoint = six_vertex_radius_weight(Rational(0), prec);
    CHECK((g.rho - g_endpoint).abs() < g.rho * pow10_neg(50, prec));
}

TEST_CASE("pinned closed forms of the constants") {
    const long prec = 256;
    AsymConstants q = constants(Family::Quartic, prec);
    // sqrt(3)/(12 pi) and 4 sqrt(3) pi
    Real s3 = Real(3, prec).sqrt();
    Real pi = Real::pi(prec);
    CHECK((q.rho - s3 / (Real(12, prec) * pi)).is_zero());
    CHECK((q.mu - Real(4, prec) * s3 * pi).is_zero());
    CHECK(q.kappa == Rational(1, 18));
    CHECK(q.omega_radius == Rational(1, 27));

    AsymConstants g = constants(Family::General, prec);
    CHECK((g.rho - Real(1, prec) / (Real(4, prec) * pi)).is_zero());
    CHECK((g.mu - Real(4, prec) * pi).is_zero());
    CHECK(g.kappa == Rational(1, 16));
    CHECK(g.omega_radius == Rational(1, 16));
}

TEST_CASE("numeric slope of the singular logarithm") {
    const long prec = 320;
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        AsymConstants a = constants(f, prec);
        Real fit = singular_slope_fit(f, Rational(1, 1000), Rational(1, 10000), prec);
        Real rel = ((fit - a.slope) / a.slope).abs();
        // eps log eps fits converge slowly; five percent at these epsilons
        CHECK(rel < Real(Rational(1, 20), prec));
    }
}

TEST_CASE("coefficient growth table") {
    const long prec = 192;
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        auto rows = growth_report(f, 300, prec);
        REQUIRE(rows.size() == 300);
        AsymConstants a = constants(f, prec);
        CHECK(rows[0].r_n == Integer(1));
        for (const auto& row : rows)
            if (row.n >= 2) CHECK(row.r_n < Integer(0));
        // ratios approach the growth rate
        Real gap = ((rows[199].ratio - a.mu) / a.mu).abs();
        CHECK(gap < Real(Rational(1, 50), prec));
        // normalized |r_n| n^2 log^2 n / mu^n drifts toward 1/6 resp. 1/4
        Rational target_q = f == Family::Quartic ? Rational(1, 6) : Rational(1, 4);
        Real target(target_q, prec);
        CHECK((rows[299].normalized - target).abs() < (rows[99].normalized - target).abs());
    }
}

TEST_CASE("growth table CSV shape") {
    std::string csv = growth_csv(Family::General, 4, 192);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,r_n,ratio,normalized");
    long rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.find(',') != std::string::npos);
    }
    CHECK(rows == 4);
    CHECK(csv.substr(0, 40) == growth_csv(Family::General, 4, 192).substr(0, 40));
}

TEST_CASE("series evaluation near the radius stays finite and positive") {
    const long prec = 192;
    for (Family f : {Family::Quartic, Family::General}) {
        CAPTURE(family_name(f));
        Real w = omega_at(f, Rational(1, 100), prec);
        CHECK(w.sign() > 0);
        // closer to the radius the value grows
        Real w2 = omega_at(f, Rational(1, 1000), prec);
        CHECK(w < w2);
    }
}
