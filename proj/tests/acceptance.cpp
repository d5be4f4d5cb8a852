// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Tolerances and time budgets are pinned here; exit status is the number of
// failed criteria. Everything below is exact arithmetic unless a line says
// otherwise.

#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <eo/checks.hpp>

using namespace eo;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
    if (!o.pass) return;
    o.pass = false;
    o.detail = msg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void enforce_budget(Outcome& o, double elapsed, double budget) {
    if (o.pass && elapsed > budget) {
        std::ostringstream os;
        os << "over budget: " << elapsed << "s > " << budget << "s";
        fail(o, os.str());
    }
}

// 1. Both counting sequences from the closed form, order 30, exact match of
// the low coefficients, under 5 seconds.
Outcome sequence_reproduction() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    USeries q = gf_main(Family::Quartic, 30);
    USeries g = gf_main(Family::General, 30);
    const long q_want[] = {0, 4, 35, 402};
    const long g_want[] = {0, 1, 5, 33};
    for (long n = 0; n <= 3; ++n) {
        if (q.coeff(n) != Rational(q_want[n])) fail(o, "quartic coefficient " + std::to_string(n));
        if (g.coeff(n) != Rational(g_want[n])) fail(o, "general coefficient " + std::to_string(n));
    }
    for (long n = 1; n <= 30; ++n) {
        if (!q.coeff(n).is_integer() || !g.coeff(n).is_integer())
            fail(o, "non-integral coefficient at order " + std::to_string(n));
        if (n >= 1 && !(Rational(0) < q.coeff(n) && Rational(0) < g.coeff(n)))
            fail(o, "non-positive coefficient at order " + std::to_string(n));
    }
    enforce_budget(o, seconds_since(t0), 5.0);
    return o;
}

// 2. The inverse series R: five pinned leading values per family, exact, and
// integrality of every coefficient through order 500.
Outcome inverse_series_values() {
    Outcome o;
    const long rq_want[] = {0, 1, -3, -12, -105, -1206};
    const long rg_want[] = {0, 1, -2, -4, -20, -132};
    USeries rq = series_R(Family::Quartic, 5);
    USeries rg = series_R(Family::General, 5);
    for (long n = 1; n <= 5; ++n) {
        if (rq.coeff(n) != Rational(rq_want[n])) fail(o, "quartic R coefficient " + std::to_string(n));
        if (rg.coeff(n) != Rational(rg_want[n])) fail(o, "general R coefficient " + std::to_string(n));
    }
    for (Family f : {Family::Quartic, Family::General}) {
        USeries r = series_R(f, 500);
        for (long n = 0; n <= 500; ++n)
            if (!r.coeff(n).is_integer()) {
                fail(o, std::string(family_name(f)) + ": R not integral at " + std::to_string(n));
                break;
            }
    }
    return o;
}

// 3. Functional-equation solver at order 10 against the explicit triples,
// cell for cell, and the colourful sequence against twice the general one.
// Zero tolerance, under 60 seconds.
Outcome solver_vs_closed_form() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    CheckParams p;
    p.order = 10;
    CheckResult r = checks::system_vs_closed_form(p);
    if (!r.pass) fail(o, r.detail);
    enforce_budget(o, seconds_since(t0), 60.0);
    return o;
}

// 4. Brute-force map enumeration: full orientation counts for 1..3 edges,
// quartic counts for 1..3 vertices, partial counts for 1..2 edges, all
// against pinned literals. The 6-edge quartic sweep gets 10 minutes.
Outcome brute_force_oracle() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const long g_want[] = {0, 1, 5, 33};
    for (long n = 1; n <= 3; ++n) {
        Integer total(0);
        enumerate_rooted_maps(n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::Total);
        });
        if (total != Integer(g_want[n]))
            fail(o, "full orientations at " + std::to_string(n) + " edges");
    }
    const long p_want[] = {0, 4, 35};
    for (long n = 1; n <= 2; ++n) {
        Integer total(0);
        enumerate_rooted_maps(n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::Partial);
        });
        if (total != Integer(p_want[n]))
            fail(o, "partial orientations at " + std::to_string(n) + " edges");
    }
    const long q_want[] = {0, 4, 35, 402};
    EnumOptions quartic;
    quartic.allowed_degrees = {4};
    for (long n = 1; n <= 3; ++n) {
        Integer total(0);
        enumerate_rooted_maps(2 * n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::QuarticRootForced);
        }, quartic);
        if (total != Integer(q_want[n]))
            fail(o, "quartic orientations at " + std::to_string(n) + " vertices");
    }
    enforce_budget(o, seconds_since(t0), 600.0);
    return o;
}

// 5. Bijection suite: both round trips on every labelled map with up to 3
// edges and every mobile map of the same sizes, statistic transfer on each
// instance, and the colourful double cover for 1 and 2 quadrangles.
Outcome bijection_suite() {
    Outcome o;
    CheckParams p;
    p.edges = 3;
    CheckResult r = checks::bijection_roundtrip(p);
    if (!r.pass) fail(o, r.detail);
    // pinned colourful counts: twice the full orientation counts
    const long col_want[] = {0, 2, 10};
    for (long n = 1; n <= 2 && o.pass; ++n) {
        long colourful = 0;
        enumerate_labelled_maps(2 * n, [&](const LabelledMap& L) {
            if (is_quadrangulation(L.base) && is_colourful(L)) ++colourful;
        });
        if (colourful != col_want[n])
            fail(o, "colourful count at " + std::to_string(n) + " quadrangles");
    }
    if (o.pass) {
        CheckParams pc;
        pc.edges = 4; // two quadrangles
        CheckResult rc = checks::colourful_2to1(pc);
        if (!rc.pass) fail(o, rc.detail);
    }
    return o;
}

// 6. Identity suite: the Catalan-weight identity to total order 20, the
// binomial convolution for all indices up to 12, and both ODE residuals
// identically zero through order 50.
Outcome identity_suite() {
    Outcome o;
    CheckParams p;
    p.order = 20;
    CheckResult cat = checks::cat_identity(p);
    if (!cat.pass) fail(o, "catalan identity: " + cat.detail);
    p.order = 12;
    CheckResult vdm = checks::vandermonde(p);
    if (!vdm.pass) fail(o, "binomial convolution: " + vdm.detail);
    p.order = 50;
    CheckResult ode1 = checks::omega_ode(p);
    if (!ode1.pass) fail(o, "weight series ODE: " + ode1.detail);
    CheckResult ode2 = checks::R_ode(p);
    if (!ode2.pass) fail(o, "inverse series ODE: " + ode2.detail);
    return o;
}

// 7. Tutte specialization: sum of T(3,3) over all rooted planar maps with
// 1, 2, 3 edges equals 6, 78, 1326. Under 2 minutes.
Outcome tutte_cross_check() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const long want[] = {0, 6, 78, 1326};
    for (long E = 1; E <= 3; ++E)
        if (tutte_sum_33(E) != Integer(want[E]))
            fail(o, "T(3,3) sum at " + std::to_string(E) + " edges");
    enforce_budget(o, seconds_since(t0), 120.0);
    return o;
}

// 8. Tree oracles: primitive balanced-tree counts against t - R, and the
// u-weighted marked sums against the deformed fixed point at u = 1, 2, -1.
Outcome tree_oracles() {
    Outcome o;
    CheckParams p;
    CheckResult r = checks::trees_check(p);
    if (!r.pass) fail(o, r.detail);
    // the pinned literals, independent of the series comparison inside
    if (count_primitive_trees(Family::Quartic, 2) != Integer(3) ||
        count_primitive_trees(Family::Quartic, 3) != Integer(12))
        fail(o, "quartic primitive counts");
    if (count_primitive_trees(Family::General, 2) != Integer(2) ||
        count_primitive_trees(Family::General, 3) != Integer(4) ||
        count_primitive_trees(Family::General, 4) != Integer(20))
        fail(o, "general primitive counts");
    return o;
}

// 9. Asymptotics, property based: the coefficient ratio r_200/r_199 times the
// radius is within 2% of 1, the log-slope fits are within 5% of the closed
// forms, mu * rho = 1 to working precision and the two radius formulas agree
// to 50 significant digits. Under 5 minutes.
Outcome asymptotic_estimates() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const long prec = 320;
    Real two_pct(Rational(1) / Rational(50), prec);
    Real five_pct(Rational(1) / Rational(20), prec);
    for (Family f : {Family::Quartic, Family::General}) {
        AsymConstants a = constants(f, prec);
        auto rows = growth_report(f, 200, prec);
        // rows are indexed from n = 1; rows[198].ratio is r_200 / r_199
        Real scaled = (rows[198].ratio * a.rho).abs();
        if (two_pct < (scaled - Real(1, prec)).abs())
            fail(o, std::string(family_name(f)) + ": ratio at n=200 off by more than 2%");
        Real slope = singular_slope_fit(f, Rational(1) / Rational(1000),
                                        Rational(1) / Rational(10000), prec);
        if (a.slope * five_pct < (slope - a.slope).abs())
            fail(o, std::string(family_name(f)) + ": slope fit off by more than 5%");
    }
    CheckParams p;
    p.limits.precision_bits = 320;
    CheckResult r = checks::asym_constants(p);
    if (!r.pass) fail(o, r.detail);
    enforce_budget(o, seconds_since(t0), 300.0);
    return o;
}

// 10. Forest link: the signed forest statistic from brute-force enumeration
// equals 6 q_n / (n+1), giving 6 at three inner faces and 42 at four.
Outcome forest_link() {
    Outcome o;
    if (signed_forest_statistic(3) != Integer(6)) fail(o, "value at three faces");
    if (signed_forest_statistic(4) != Integer(42)) fail(o, "value at four faces");
    if (!check_forest_link(2).is_zero()) fail(o, "identity against the series");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const std::vector<Criterion> table = {
        {"sequence reproduction", sequence_reproduction},
        {"inverse series values", inverse_series_values},
        {"solver vs closed form", solver_vs_closed_form},
        {"brute force oracle", brute_force_oracle},
        {"bijection suite", bijection_suite},
        {"identity suite", identity_suite},
        {"tutte cross check", tutte_cross_check},
        {"tree oracles", tree_oracles},
        {"asymptotic estimates", asymptotic_estimates},
        {"forest link", forest_link},
    };
    int failures = 0;
    for (size_t i = 0; i < table.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = table[i].run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        if (o.pass) {
            std::printf("%2zu %-22s pass   (%.2fs)\n", i + 1, table[i].name, dt);
        } else {
            std::printf("%2zu %-22s FAIL   (%.2fs) %s\n", i + 1, table[i].name, dt,
                        o.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, table.size());
    else std::printf("all %zu criteria passed\n", table.size());
    return failures;
}
