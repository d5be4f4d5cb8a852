#pragma once

// Named verification suite shared by the command line tool and the tests.
// Every check is deterministic and returns pass/fail plus a detail string
// locating the first violation. Checks with a natural size knob read it from
// CheckParams; zero means the pinned default.

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asym.hpp"
#include "bijection.hpp"
#include "closedform.hpp"
#include "config.hpp"
#include "fesolver.hpp"
#include "trees.hpp"

namespace eo {

struct CheckParams {
    Limits limits;
    long order = 0; // series truncation knob, 0 = per-check default
    long edges = 0; // enumeration size knob, 0 = per-check default
};

struct CheckResult {
    bool pass = true;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::string status; // "pass" or "fail"
    std::string detail;
    long wall_time_ms = 0;
};

namespace checks {

inline void fail(CheckResult& r, const std::string& msg) {
    if (!r.pass) return;
    r.pass = false;
    r.detail = msg;
}

inline long ord_or(const CheckParams& p, long dflt) { return p.order > 0 ? p.order : dflt; }
inline long edges_or(const CheckParams& p, long dflt) { return p.edges > 0 ? p.edges : dflt; }

inline CheckResult asym_constants(const CheckParams& p) {
    CheckResult r;
    long prec = std::max(p.limits.precision_bits, 256L);
    // 10^-50 relative agreement target for the endpoint formulas
    Rational tol_q(1);
    for (int i = 0; i < 50; ++i) tol_q = tol_q / Rational(10);
    Real tol(tol_q, prec);
    for (Family f : {Family::Quartic, Family::General}) {
        AsymConstants a = constants(f, prec);
        Real one(1, prec);
        Real mu_rho = a.mu * a.rho - one;
        // product of two exact-formula evaluations; anything beyond a few
        // ulps means the formulas disagree
        Real ulp = (Real(Rational(1) / Rational(2), prec)).pow_ui(static_cast<unsigned long>(prec - 16));
        if (ulp < mu_rho.abs()) fail(r, std::string(family_name(f)) + ": mu*rho != 1");
        Real endpoint = (f == Family::Quartic)
                            ? six_vertex_radius_lambda(Rational(2) / Rational(3), prec)
                            : six_vertex_radius_weight(Rational(0), prec);
        if (a.rho * tol < (endpoint - a.rho).abs())
            fail(r, std::string(family_name(f)) + ": radius formula mismatch beyond 50 digits");
    }
    return r;
}

inline CheckResult bijection_roundtrip(const CheckParams& p) {
    CheckResult r;
    long max_e = std::min(edges_or(p, 3), p.limits.max_edges);
    USeries g = gf_main(Family::General, max_e);
    for (long E = 1; E <= max_e && r.pass; ++E) {
        long n_lab = 0, n_mob = 0;
        enumerate_labelled_maps(E, [&](const LabelledMap& L) {
            if (!r.pass) return;
            ++n_lab;
            MobileMap M = phi(L);
            // vertex, edge and face statistics must transfer
            long mins = count_local_minima(L);
            long blacks = 0, whites = 0;
            for (char b : M.black) (b ? blacks : whites)++;
            if (blacks != n_faces(L.base)) fail(r, "black count != face count");
            if (whites != n_vertices(L.base) - mins) fail(r, "white count mismatch");
            if (M.base.edges() != L.base.edges()) fail(r, "edge count changed");
            if (n_faces(M.base) != mins) fail(r, "face count != local minima");
            LabelledMap back = psi(M);
            if (!(canonical_form(back) == canonical_form(L))) fail(r, "psi(phi(L)) != L");
        });
        enumerate_mobile_maps(E, [&](const MobileMap& M) {
            if (!r.pass) return;
            ++n_mob;
            LabelledMap L = psi(M);
            if (!(canonical_form(phi(L)) == canonical_form(M))) fail(r, "phi(psi(M)) != M");
        });
        if (r.pass && (Rational(n_lab) != g.coeff(E) || Rational(n_mob) != g.coeff(E))) {
            std::ostringstream os;
            os << "count mismatch at " << E << " edges: " << n_lab << " labelled, " << n_mob
               << " mobile, series says " << g.coeff(E);
            fail(r, os.str());
        }
    }
    return r;
}

inline CheckResult cat_identity(const CheckParams& p) {
    CheckResult r;
    long order = ord_or(p, 20);
    auto rep = check_cat_identity(order);
    if (!rep.ok) fail(r, "residual nonzero up to total order " + std::to_string(order));
    return r;
}

inline CheckResult colourful_2to1(const CheckParams& p) {
    CheckResult r;
    long n_max = std::min(edges_or(p, 4), p.limits.max_edges) / 2;
    for (long n = 1; n <= n_max && r.pass; ++n) {
        std::set<std::pair<CombMap, std::vector<long>>> colourful;
        enumerate_labelled_maps(2 * n, [&](const LabelledMap& L) {
            if (is_quadrangulation(L.base) && is_colourful(L)) {
                LabelledMap c = canonical_form(L);
                colourful.insert({c.base, c.label});
            }
        });
        std::map<std::pair<CombMap, std::vector<long>>, long> hit;
        long maps = 0;
        enumerate_labelled_maps(n, [&](const LabelledMap& L) {
            if (!r.pass) return;
            ++maps;
            auto [q1, q2] = colourful_pair(L);
            LabelledMap c1 = canonical_form(q1), c2 = canonical_form(q2);
            if (c1 == c2) fail(r, "pair members coincide");
            ++hit[{c1.base, c1.label}];
            ++hit[{c2.base, c2.label}];
            if (!(canonical_form(colourful_to_labelled(q1)) == canonical_form(L)) ||
                !(canonical_form(colourful_to_labelled(q2)) == canonical_form(L)))
                fail(r, "pair inverse mismatch");
        });
        if (!r.pass) break;
        if (long(colourful.size()) != 2 * maps) {
            std::ostringstream os;
            os << "at " << n << " faces: " << colourful.size() << " colourful vs 2*" << maps;
            fail(r, os.str());
        }
        for (auto& [k, c] : hit)
            if (c != 1 || !colourful.count(k)) fail(r, "cover is not exactly two-to-one");
    }
    return r;
}

inline CheckResult forest_link(const CheckParams&) {
    CheckResult r;
    if (!check_forest_link(2).is_zero()) fail(r, "signed forest identity violated");
    return r;
}

inline CheckResult growth_report_check(const CheckParams& p) {
    CheckResult r;
    long prec = std::max(p.limits.precision_bits, 128L);
    long n_max = std::max(ord_or(p, 1000), 250L);
    for (Family f : {Family::Quartic, Family::General}) {
        auto rows = growth_report(f, n_max, prec);
        AsymConstants a = constants(f, prec);
        for (const auto& row : rows)
            if (row.n >= 2 && !(row.r_n < Integer(0))) {
                fail(r, std::string(family_name(f)) + ": r_n not negative at n=" +
                            std::to_string(row.n));
                return r;
            }
        Real gap200 = (rows[199].ratio - a.mu).abs() / a.mu;
        if (Real(Rational(1) / Rational(50), prec) < gap200)
            fail(r, std::string(family_name(f)) + ": ratio at n=200 off by more than 2%");
        Rational kp = (f == Family::Quartic) ? Rational(1) / Rational(6) : Rational(1) / Rational(4);
        Real target(kp, prec);
        Real gap_early = (rows[99].normalized - target).abs();
        Real gap_late = (rows[size_t(n_max - 1)].normalized - target).abs();
        if (!(gap_late < gap_early))
            fail(r, std::string(family_name(f)) + ": normalized column not trending to target");
    }
    return r;
}

inline CheckResult omega_ode(const CheckParams& p) {
    CheckResult r;
    for (Family f : {Family::Quartic, Family::General})
        if (!check_omega_ode(f, ord_or(p, 50)).is_zero())
            fail(r, std::string(family_name(f)) + ": residual nonzero");
    return r;
}

inline CheckResult oracle_eo(const CheckParams& p) {
    CheckResult r;
    long max_e = std::min(edges_or(p, 3), p.limits.max_edges);
    USeries g = gf_main(Family::General, max_e);
    for (long n = 1; n <= max_e && r.pass; ++n) {
        Integer total(0);
        enumerate_rooted_maps(n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::Total);
        });
        if (Rational(total) != g.coeff(n)) {
            std::ostringstream os;
            os << "n=" << n << ": enumerated " << total << " vs series " << g.coeff(n);
            fail(r, os.str());
        }
    }
    return r;
}

inline CheckResult oracle_partial(const CheckParams& p) {
    CheckResult r;
    long max_e = std::min(edges_or(p, 3), p.limits.max_edges);
    USeries q = gf_main(Family::Quartic, max_e);
    for (long n = 1; n <= max_e && r.pass; ++n) {
        Integer total(0);
        enumerate_rooted_maps(n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::Partial);
        });
        if (Rational(total) != q.coeff(n)) {
            std::ostringstream os;
            os << "n=" << n << ": enumerated " << total << " vs series " << q.coeff(n);
            fail(r, os.str());
        }
    }
    return r;
}

inline CheckResult oracle_quartic(const CheckParams& p) {
    CheckResult r;
    long n_max = std::min(edges_or(p, 4), p.limits.max_edges) / 2;
    USeries q = gf_main(Family::Quartic, n_max);
    EnumOptions opt;
    opt.allowed_degrees = {4};
    for (long n = 1; n <= n_max && r.pass; ++n) {
        Integer total(0);
        enumerate_rooted_maps(2 * n, [&](const CombMap& m) {
            total = total + count_eulerian_orientations(m, OrientMode::QuarticRootForced);
        }, opt);
        if (Rational(total) != q.coeff(n)) {
            std::ostringstream os;
            os << "n=" << n << ": enumerated " << total << " vs series " << q.coeff(n);
            fail(r, os.str());
        }
    }
    return r;
}

inline CheckResult patch_tables(const CheckParams&) {
    CheckResult r;
    const long level = 3, ceiling = 5;
    for (bool colourful : {false, true}) {
        SystemKind kind = colourful ? SystemKind::Colourful : SystemKind::Quartic;
        FESystem sys = FESystem::solve(kind, level);
        PatchTables tab = enumerate_patch_tables(colourful, level, ceiling);
        long compared = 0;
        for (long j = 0; j <= level && r.pass; ++j)
            for (long n = 0; j + n <= level && r.pass; ++n) {
                const char* who = colourful ? "colourful" : "plain";
                if (j + 2 * n <= ceiling) {
                    // scalar patch count
                    long want_p = 0;
                    if (auto it = tab.p.find({j, n}); it != tab.p.end()) want_p = it->second;
                    if (sys.p(j, n) != Rational(want_p)) {
                        std::ostringstream os;
                        os << who << " P(" << j << "," << n << "): solver " << sys.p(j, n)
                           << " vs " << want_p << " patches";
                        fail(r, os.str());
                    }
                    // root-degree refinement; scan past both supports so a
                    // count present on only one side is caught
                    const XLaurent& cc = sys.c(j, n);
                    long xhigh = cc.hi();
                    for (const auto& [key, cnt] : tab.c)
                        if (std::get<0>(key) == j && std::get<1>(key) == n)
                            xhigh = std::max(xhigh, std::get<2>(key));
                    for (long x = std::min(0L, cc.lo()); x <= xhigh; ++x) {
                        long want = 0;
                        if (auto it = tab.c.find({j, n, x}); it != tab.c.end()) want = it->second;
                        if (cc.coeff(x) != Rational(want)) {
                            std::ostringstream os;
                            os << who << " C(" << j << "," << n << ") x^" << x << ": solver "
                               << cc.coeff(x) << " vs " << want << " patches";
                            fail(r, os.str());
                            break;
                        }
                    }
                    compared += 2;
                }
                // digon refinement, exact only while the edge budget allows
                long kmax = ceiling - j - 2 * n;
                if (kmax < 0) continue;
                const XLaurent& dd = sys.d(j, n);
                kmax = std::min(kmax, sys.d_hi(j, n));
                for (long k = 0; k <= kmax; ++k) {
                    long want = 0;
                    if (auto it = tab.d.find({j, n, k}); it != tab.d.end()) want = it->second;
                    if (dd.coeff(k) != Rational(want)) {
                        std::ostringstream os;
                        os << who << " D(" << j << "," << n << ") x^" << k << ": solver "
                           << dd.coeff(k) << " vs " << want << " patches";
                        fail(r, os.str());
                        break;
                    }
                }
                ++compared;
            }
        if (r.pass && compared < 20) fail(r, "too few comparable cells");
    }
    return r;
}

inline CheckResult phi4_refinement(const CheckParams& p) {
    CheckResult r;
    long n_max = std::min(edges_or(p, 4), p.limits.max_edges) / 2;
    for (long n = 1; n <= n_max && r.pass; ++n) {
        enumerate_labelled_maps(2 * n, [&](const LabelledMap& L) {
            if (!r.pass || !is_quadrangulation(L.base)) return;
            auto vm = vertex_of(L.base);
            auto fm = face_of(L.base);
            std::vector<std::vector<int>> pf(static_cast<size_t>(n_faces(L.base)));
            for (int d = 0; d < L.base.darts(); ++d) pf[size_t(fm[size_t(d)])].push_back(d);
            long two_label = 0;
            for (auto& fdarts : pf)
                if (!face_has_three_labels(L, vm, fdarts)) ++two_label;
            LabelledMap m4 = phi4(L);
            auto vm4 = vertex_of(m4.base);
            long flat = 0;
            for (int d : edge_reps(m4.base))
                if (m4.label[size_t(vm4[size_t(d)])] ==
                    m4.label[size_t(vm4[size_t(m4.base.alpha[size_t(d)])])])
                    ++flat;
            if (two_label != flat) fail(r, "two-label faces != flat edges");
            if (long(edge_reps(m4.base).size()) != n) fail(r, "image edge count != face count");
        });
    }
    return r;
}

inline CheckResult R_ode(const CheckParams& p) {
    CheckResult r;
    for (Family f : {Family::Quartic, Family::General})
        if (!check_R_ode(f, ord_or(p, 50)).is_zero())
            fail(r, std::string(family_name(f)) + ": residual nonzero");
    return r;
}

inline CheckResult system_vs_closed_form(const CheckParams& p) {
    CheckResult r;
    long N = std::min(ord_or(p, 5), p.limits.max_order);
    for (SystemKind kind : {SystemKind::Quartic, SystemKind::Colourful}) {
        Family f = kind == SystemKind::Quartic ? Family::Quartic : Family::General;
        FESystem sys = FESystem::solve(kind, N);
        ClosedTriple cf = explicit_triple(f, N + 2, sys.x_out());
        CrossReport rep = sys.cross_validate(cf);
        if (!rep.identical) {
            fail(r, std::string(system_name(kind)) + ": " + rep.first_mismatch);
            return r;
        }
        USeries q = sys.extract_Q();
        USeries main = gf_main(f, q.order());
        for (long n = 0; n <= q.order(); ++n) {
            Rational want = main.coeff(n);
            if (kind == SystemKind::Colourful) want = Rational(2) * want;
            if (q.coeff(n) != want) {
                std::ostringstream os;
                os << system_name(kind) << ": Q coefficient " << n << " is " << q.coeff(n)
                   << ", closed form gives " << want;
                fail(r, os.str());
                return r;
            }
        }
    }
    return r;
}

inline CheckResult trees_check(const CheckParams&) {
    CheckResult r;
    USeries rq = series_R(Family::Quartic, 5);
    USeries rg = series_R(Family::General, 6);
    // primitive counts against t - R
    std::vector<std::pair<long, long>> quartic_vals = {{2, 3}, {3, 12}};
    for (auto [n, want] : quartic_vals) {
        Integer c = count_primitive_trees(Family::Quartic, n);
        if (c != Integer(want) || Rational(c) != -rq.coeff(n))
            fail(r, "quartic primitive count at " + std::to_string(n));
    }
    std::vector<std::pair<long, long>> general_vals = {{2, 2}, {3, 4}, {4, 20}};
    for (auto [n, want] : general_vals) {
        Integer c = count_primitive_trees(Family::General, n);
        if (c != Integer(want) || Rational(c) != -rg.coeff(n))
            fail(r, "general primitive count at " + std::to_string(n));
    }
    // marked sums against the deformed fixed point
    for (Family f : {Family::Quartic, Family::General}) {
        long bound = f == Family::Quartic ? 4 : 5;
        for (Rational u : {Rational(1), Rational(2), Rational(-1)}) {
            USeries R = tree_R(f, u, bound);
            for (long n = 2; n <= bound; ++n) {
                Rational series_side = R.coeff(n) / u;
                if (marked_tree_sum(f, n, u) != series_side)
                    fail(r, std::string(family_name(f)) + ": marked sum at n=" +
                                std::to_string(n));
            }
        }
        // u = -1 collapses to the primitive family, u = 0 to a bare stem
        USeries base = tree_R(f, Rational(-1), 12);
        USeries direct = series_R(f, 12);
        for (long n = 0; n <= 12; ++n)
            if (base.coeff(n) != direct.coeff(n)) fail(r, "tree fixed point != R at u=-1");
        USeries zero = tree_R(f, Rational(0), 8);
        for (long n = 0; n <= 8; ++n)
            if (zero.coeff(n) != (n == 1 ? Rational(1) : Rational(0)))
                fail(r, "tree fixed point != t at u=0");
    }
    return r;
}

inline CheckResult tutte33(const CheckParams& p) {
    CheckResult r;
    std::vector<Integer> want = {Integer(6), Integer(78), Integer(1326), Integer(25992)};
    long max_e = std::min(edges_or(p, 3), long(want.size()));
    for (long E = 1; E <= max_e; ++E) {
        Integer got = tutte_sum_33(E);
        if (got != want[size_t(E - 1)]) {
            std::ostringstream os;
            os << "E=" << E << ": " << got << " vs " << want[size_t(E - 1)];
            fail(r, os.str());
        }
    }
    return r;
}

inline CheckResult vandermonde(const CheckParams& p) {
    CheckResult r;
    long bound = ord_or(p, 12);
    for (long k = 0; k <= bound; ++k)
        for (long n = 0; n <= k; ++n)
            for (long l = 0; l <= bound; ++l)
                if (!check_vandermonde(k, l, n)) {
                    std::ostringstream os;
                    os << "violated at k=" << k << " l=" << l << " n=" << n;
                    fail(r, os.str());
                    return r;
                }
    return r;
}

} // namespace checks

// registry in alphabetical order; `verify --all` reports in this order
inline const std::vector<std::pair<std::string, CheckResult (*)(const CheckParams&)>>&
check_registry() {
    static const std::vector<std::pair<std::string, CheckResult (*)(const CheckParams&)>> reg = {
        {"asym-constants", checks::asym_constants},
        {"bijection-roundtrip", checks::bijection_roundtrip},
        {"cat-identity", checks::cat_identity},
        {"colourful-2to1", checks::colourful_2to1},
        {"forest-link", checks::forest_link},
        {"growth-report", checks::growth_report_check},
        {"omega-ode", checks::omega_ode},
        {"oracle-eo", checks::oracle_eo},
        {"oracle-partial", checks::oracle_partial},
        {"oracle-quartic", checks::oracle_quartic},
        {"patch-tables", checks::patch_tables},
        {"phi4-refinement", checks::phi4_refinement},
        {"r-ode", checks::R_ode},
        {"system-vs-closed-form", checks::system_vs_closed_form},
        {"trees", checks::trees_check},
        {"tutte33", checks::tutte33},
        {"vandermonde", checks::vandermonde},
    };
    return reg;
}

inline bool check_exists(const std::string& name) {
    for (const auto& [n, fn] : check_registry())
        if (n == name) return true;
    return false;
}

inline CheckReport run_check(const std::string& name, const CheckParams& params) {
    for (const auto& [n, fn] : check_registry()) {
        if (n != name) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = fn(params);
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        CheckReport rep;
        rep.name = name;
        rep.status = res.pass ? "pass" : "fail";
        rep.detail = res.detail;
        rep.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return rep;
    }
    throw std::invalid_argument("unknown check: " + name);
}

inline std::vector<CheckReport> run_all_checks(const CheckParams& params) {
    std::vector<CheckReport> out;
    for (const auto& [n, fn] : check_registry()) out.push_back(run_check(n, params));
    return out;
}

} // namespace eo
