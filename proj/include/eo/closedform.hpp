#pragma once

// Closed-form side of the story: the hypergeometric-style series Omega, its
// compositional inverse R, the two main counting series extracted from R, and
// the explicit three-series solution written as exponentials of double sums
// evaluated at R. Everything is exact rational arithmetic.

#include <cassert>
#include <stdexcept>
#include <utility>

#include "binomial.hpp"
#include "totalseries.hpp"
#include "uniseries.hpp"

namespace eo {

enum class Family { Quartic, General };

inline const char* family_name(Family f) { return f == Family::Quartic ? "quartic" : "general"; }

// per-family constants: Omega term weight, the quadratic part subtracted from
// R before dividing by t^2, and the two integers in the differential equation
// c*O + r(m*r - 1)*O'' = 0.
struct FamilyParams {
    long sub_quad;   // numerator is t - sub_quad*t^2 - R
    long div_scale;  // ... divided by div_scale * t^2
    long ode_c;
    long ode_m;
};

inline FamilyParams family_params(Family f) {
    if (f == Family::Quartic) return {3, 3, 6, 27};
    return {2, 4, 4, 16};
}

// coefficient of r^{n+1} in Omega
inline Rational omega_weight(Family f, long n) {
    if (f == Family::Quartic) return Rational(binom(2 * n, n) * binom(3 * n, n)) / Rational(n + 1);
    Integer c = binom(2 * n, n);
    return Rational(c * c) / Rational(n + 1);
}

inline USeries omega(Family f, long order) {
    USeries s(order);
    for (long n = 0; n + 1 <= order; ++n) s.set_coeff(n + 1, omega_weight(f, n));
    return s;
}

// R as a t-series, by the integer recurrence that the differential equation
// R(mR - 1)R'' = c t (R')^3 induces on coefficients:
//   K(K+1) r_{K+1} = m (R^2 R'')_K - c ((R')^3)_{K-1}
//                    - sum_{i=2}^{K} r_i (K-i+2)(K-i+1) r_{K-i+2}
// with r_1 = 1. Each step is an exact integer division. Tests pin this
// series against the compositional inverse of Omega.
inline USeries series_R(Family f, long order) {
    FamilyParams fp = family_params(f);
    if (order < 1) return USeries(std::max(order, 0L));
    std::vector<Integer> r(size_t(order + 1), Integer(0));
    r[1] = Integer(1);
    // rolling convolutions: r2 = coefficients of R^2, dr2 = of (R')^2
    std::vector<Integer> r2(size_t(order + 1), Integer(0));
    std::vector<Integer> dr2(size_t(order + 1), Integer(0));
    auto dcoef = [&](long l) { return Integer(l + 1) * r[size_t(l + 1)]; };   // (R')_l
    auto ddcoef = [&](long l) { return Integer((l + 2) * (l + 1)) * r[size_t(l + 2)]; }; // (R'')_l
    dr2[0] = Integer(1); // (R')_0^2
    for (long K = 1; K + 1 <= order; ++K) {
        // extend R^2 to index K (uses r_1..r_{K-1})
        Integer s2(0);
        for (long a = 1; a <= K - 1; ++a) s2 += r[size_t(a)] * r[size_t(K - a)];
        r2[size_t(K)] = s2;
        // (R^2 R'')_K: R^2 has valuation 2, R'' index K-s needs r_{K-s+2} <= r_K
        Integer lhs(0);
        for (long s = 2; s <= K; ++s)
            if (!r2[size_t(s)].is_zero()) lhs += r2[size_t(s)] * ddcoef(K - s);
        lhs *= Integer(fp.ode_m);
        // ((R')^3)_{K-1} via (R')^2
        Integer cube(0);
        for (long a = 0; a <= K - 1; ++a)
            if (!dr2[size_t(a)].is_zero()) cube += dr2[size_t(a)] * dcoef(K - 1 - a);
        lhs -= Integer(fp.ode_c) * cube;
        for (long i = 2; i <= K; ++i)
            if (!r[size_t(i)].is_zero()) lhs -= r[size_t(i)] * ddcoef(K - i);
        r[size_t(K + 1)] = div_exact(lhs, Integer(long(K) * (K + 1)));
        // extend (R')^2 to index K for the next step
        Integer sd(0);
        for (long a = 0; a <= K; ++a) sd += dcoef(a) * dcoef(K - a);
        dr2[size_t(K)] = sd;
    }
    USeries out(order);
    for (long k = 1; k <= order; ++k) out.set_coeff(k, Rational(r[size_t(k)]));
    return out;
}

// (t - q t^2 - R) / (d t^2): the main counting series of the family.
// The numerator must vanish to order 2; anything else is an internal error.
inline USeries gf_main(Family f, long order) {
    FamilyParams fp = family_params(f);
    USeries r = series_R(f, order + 2);
    USeries num(order + 2);
    for (long k = 0; k <= order + 2; ++k) num.set_coeff(k, -r.coeff(k));
    num.set_coeff(1, num.coeff(1) + Rational(1));
    num.set_coeff(2, num.coeff(2) - Rational(fp.sub_quad));
    if (!num.coeff(0).is_zero() || !num.coeff(1).is_zero() || !num.coeff(2).is_zero())
        throw std::logic_error("gf_main: numerator not divisible by t^2");
    USeries q(order);
    for (long k = 0; k <= order; ++k) q.set_coeff(k, num.coeff(k + 2) / Rational(fp.div_scale));
    return q;
}

// The explicit solution of the catalytic system, in the scaled variables
// where y marks half the outer degree jointly with t. Cells are indexed by
// (j, tau) = (power of y, power of t); only tau <= t_order is populated.
struct ClosedTriple {
    Family family;
    long t_order;
    long x_max;
    TotalSeries P, C, D; // order 2*t_order each
};

namespace detail {

// drop cells with t-degree beyond t_order (the exponential fills them with
// garbage because the exponent series is only known to that t-order)
inline void truncate_t(TotalSeries& s, long t_order) {
    s.for_each([&](long, long n, XLaurent& c) {
        if (n > t_order) c = XLaurent();
    });
}

} // namespace detail

inline ClosedTriple explicit_triple(Family f, long t_order, long x_max) {
    if (t_order < 1 || x_max < 1) throw std::invalid_argument("explicit_triple: bad bounds");
    USeries r = series_R(f, t_order);
    // powers R^{n+1} truncated at t_order
    std::vector<USeries> pw;
    pw.push_back(r);
    while (long(pw.size()) < t_order) pw.push_back((pw.back() * r).truncated(t_order));

    long cap = 2 * t_order;
    TotalSeries P(cap), expoC(cap), expoD(cap);
    bool quartic = (f == Family::Quartic);
    for (long n = 0; n + 1 <= t_order; ++n) {
        const USeries& rp = pw[size_t(n)];
        for (long j = 0; j <= n; ++j) {
            Rational base = Rational(binom(2 * n - j, n)) / Rational(n + 1);
            // P term: base * C(3n-j, n) (or C(2n,n)) y^j R^{n+1}
            Rational pa = base * Rational(quartic ? binom(3 * n - j, n) : binom(2 * n, n));
            for (long tau = n + 1; tau <= t_order; ++tau) {
                if (rp.coeff(tau).is_zero()) continue;
                if (j + tau <= cap) P.cell(j, tau) += XLaurent(pa * rp.coeff(tau));
            }
            // C exponent: x^{i+1} y^{j+1}, i capped by the vanishing binomial
            long imax_c = quartic ? (2 * n - j) : n;
            for (long i = 0; i <= imax_c; ++i) {
                Rational ca = quartic ? base * Rational(binom(3 * n - i - j, n))
                                      : Rational(binom(2 * n - i, n) * binom(2 * n - j, n)) / Rational(n + 1);
                if (ca.is_zero()) continue;
                for (long tau = n + 1; tau <= t_order; ++tau) {
                    if (rp.coeff(tau).is_zero()) continue;
                    if (j + 1 + tau <= cap) expoC.cell(j + 1, tau) += XLaurent::term(i + 1, ca * rp.coeff(tau));
                }
            }
            // D exponent: x^i y^{j+1}, i truncated at x_max
            for (long i = 0; i <= x_max; ++i) {
                Rational da = base * Rational(quartic ? binom(3 * n + i - j + 1, 2 * n - j)
                                                      : binom(2 * n + i + 1, n));
                for (long tau = n + 1; tau <= t_order; ++tau) {
                    if (rp.coeff(tau).is_zero()) continue;
                    if (j + 1 + tau <= cap) expoD.cell(j + 1, tau) += XLaurent::term(i, da * rp.coeff(tau));
                }
            }
        }
    }
    ClosedTriple out{f, t_order, x_max, std::move(P), TotalSeries(cap), TotalSeries(cap)};
    out.C = TotalSeries::constant(cap, Rational(1)) - (-expoC).exp_series();
    out.D = expoD.exp_series();
    detail::truncate_t(out.C, t_order);
    detail::truncate_t(out.D, t_order);
    detail::truncate_t(out.P, t_order);

    // structural checks: P at y^0 collapses to Omega(R) = t, D starts at 1
    // with pure y^0 row trivial, C has no y^0 row and x-valuation 1
    out.P.for_each([&](long j, long n, XLaurent& c) {
        if (j == 0 && !(c == (n == 1 ? XLaurent(Rational(1)) : XLaurent())))
            throw std::logic_error("explicit_triple: P(t,0) != t");
    });
    out.D.for_each([&](long j, long n, XLaurent& c) {
        if (j == 0 && n > 0 && !c.is_zero()) throw std::logic_error("explicit_triple: D has stray y^0 cells");
        if (!c.is_zero() && c.lo() < 0) throw std::logic_error("explicit_triple: D has negative x powers");
    });
    if (out.D.cell(0, 0) != XLaurent(Rational(1))) throw std::logic_error("explicit_triple: D(0) != 1");
    out.C.for_each([&](long j, long, XLaurent& c) {
        if (j == 0 && !c.is_zero()) throw std::logic_error("explicit_triple: C has y^0 cells");
        if (!c.is_zero() && c.lo() < 1) throw std::logic_error("explicit_triple: C cell without x factor");
    });
    return out;
}

// sum_{i=0}^{k-n} binom(k-i, n) binom(l+i, l) == binom(k+l+1, n+l+1)
inline bool check_vandermonde(long k, long l, long n) {
    Integer lhs(0);
    for (long i = 0; i <= k - n; ++i) lhs += binom(k - i, n) * binom(l + i, l);
    return lhs == binom(k + l + 1, n + l + 1);
}

// exp(A(u,z)) * (1 - z u Cat(u)) == 1 with
// A = sum_{n, j<=n} binom(2n-j, n)/(n+1) z^{j+1} u^{n+1}
struct CatIdentityReport {
    bool ok;
    TotalSeries residual;
};

inline CatIdentityReport check_cat_identity(long order) {
    TotalSeries a(order);
    for (long n = 0; n >= 0; ++n) {
        if (n + 2 > order) break;
        for (long j = 0; j <= n && (j + 1) + (n + 1) <= order; ++j)
            a.cell(j + 1, n + 1) = XLaurent(Rational(binom(2 * n - j, n)) / Rational(n + 1));
    }
    TotalSeries b = TotalSeries::constant(order, Rational(1));
    for (long n = 0; 1 + (n + 1) <= order; ++n)
        b.cell(1, n + 1) = XLaurent(-Rational(binom(2 * n, n)) / Rational(n + 1));
    TotalSeries residual = a.exp_series() * b - TotalSeries::constant(order, Rational(1));
    return {residual.is_zero(), residual};
}

// c*O + r(mr - 1) O'' evaluated on the truncated Omega; valid to `order`
inline USeries check_omega_ode(Family f, long order) {
    FamilyParams fp = family_params(f);
    USeries O = omega(f, order + 2);
    USeries O2 = O.derivative().derivative();
    USeries poly(order + 2);
    poly.set_coeff(1, Rational(-1));
    poly.set_coeff(2, Rational(fp.ode_m));
    return (Rational(fp.ode_c) * O).truncated(order) + (poly * O2).truncated(order);
}

// R(mR - 1)R'' - c t (R')^3 with R obtained by series reversion of Omega,
// which keeps this check independent of the recurrence behind series_R
inline USeries check_R_ode(Family f, long order) {
    FamilyParams fp = family_params(f);
    USeries R = omega(f, order + 2).reversion();
    USeries R2 = R.derivative().derivative();
    USeries R1 = R.derivative();
    USeries lhs = (Rational(fp.ode_m) * (R * R) - R) * R2;
    USeries rhs = Rational(fp.ode_c) * (R1 * R1 * R1);
    USeries res(order);
    for (long k = 0; k <= order; ++k) res.set_coeff(k, lhs.coeff(k) - (k >= 1 ? rhs.coeff(k - 1) : Rational(0)));
    return res;
}

// Laurent-form identity behind the D exponent: the full positive series in x
// equals a rational function minus finitely many negative powers. lhs builds
// the series directly from binomials; rhs expands the rational form.
inline XLaurent ratq_lhs(Family f, long j, long n, long x_max) {
    XLaurent s;
    for (long i = 0; i <= x_max; ++i)
        s.add_term(i, Rational(f == Family::Quartic ? binom(3 * n + i - j + 1, 2 * n - j)
                                                    : binom(2 * n + i + 1, n)));
    return s;
}

inline XLaurent ratq_rhs(Family f, long j, long n, long x_max) {
    bool quartic = (f == Family::Quartic);
    long pow1mx = quartic ? (2 * n - j + 1) : (n + 1);
    // 1/(x^{n+1} (1-x)^{pow}) expanded from x^{-(n+1)}
    XLaurent s;
    for (long m = 0; m - (n + 1) <= x_max; ++m) s.add_term(m - (n + 1), Rational(binom(pow1mx - 1 + m, m)));
    for (long l = 0; l <= n; ++l)
        s.add_term(-(l + 1), -Rational(quartic ? binom(3 * n - l - j, 2 * n - j) : binom(2 * n - l, n)));
    return s.truncated_above(x_max);
}

} // namespace eo
