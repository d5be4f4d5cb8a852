#pragma once

// Level-by-level solver for the two catalytic fixed-point systems. The
// unknowns are tables of Laurent polynomials indexed by (j, n) with j + n at
// most the requested order; the grading makes both systems triangular, so
// each cell is forced by strictly lower levels. This is a uniqueness
// induction: we only ever evaluate the defining equations, never a closed
// form, so agreement with the explicit solution is a real cross-check.
//
// x-precision bookkeeping: cells of D are genuinely infinite series in x and
// live on a finite window [0, W]. Every operation that consumes a window
// (shifting by a negative power before taking the nonnegative part, or the
// x -> x/(1+x) substitution) narrows the range on which the result is exact.
// Each cell carries its exact range `hi`; reads beyond it are bugs and the
// solver asserts rather than publishing a possibly-inexact coefficient.

#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "closedform.hpp"
#include "totalseries.hpp"
#include "uniseries.hpp"
#include "xlaurent.hpp"

namespace eo {

enum class SystemKind { Quartic, Colourful };

inline const char* system_name(SystemKind k) { return k == SystemKind::Quartic ? "quartic" : "colourful"; }

struct SolvedTriple {
    SystemKind kind = SystemKind::Quartic;
    long order = 0;   // cells of P to level `order`, C and D to level order+1
    long x_out = 0;   // D cells published exactly on [0, x_out]
    TotalSeries P, C, D;
};

struct CrossReport {
    bool identical = true;
    long cells_compared = 0;
    std::string first_mismatch; // empty when identical
};

class FESystem {
public:
    // window: x-range used internally; -1 picks a default with enough slack
    // that every published coefficient is exact (asserted, not assumed).
    static FESystem solve(SystemKind kind, long order, long window = -1) {
        FESystem s;
        s.kind_ = kind;
        s.n_ = order;
        s.xout_ = 2 * order + 2;
        s.w_ = window >= 0 ? window : (kind == SystemKind::Quartic ? 3 * order + 4 : 2 * order + 2);
        if (s.w_ < s.xout_) throw std::invalid_argument("FESystem: window below published range");
        long top = order + 2;
        s.d_.assign(size_t(top), std::vector<std::optional<Cell>>(size_t(top)));
        s.c_.assign(size_t(top), std::vector<std::optional<XLaurent>>(size_t(top)));
        s.p_.assign(size_t(top), std::vector<std::optional<Rational>>(size_t(top)));
        s.invd_.assign(size_t(top), std::vector<std::optional<Cell>>(size_t(top)));
        if (kind == SystemKind::Quartic)
            s.run_quartic();
        else
            s.run_colourful();
        return s;
    }

    SystemKind kind() const { return kind_; }
    long order() const { return n_; }
    long window() const { return w_; }
    long x_out() const { return xout_; }

    // cell accessors with read-before-write guards
    const XLaurent& d(long j, long n) const { return cell(d_, j, n).v; }
    long d_hi(long j, long n) const { return cell(d_, j, n).hi; }
    const XLaurent& c(long j, long n) const {
        auto& o = c_.at(size_t(j)).at(size_t(n));
        if (!o) throw std::logic_error("FESystem: C cell read before write");
        return *o;
    }
    const Rational& p(long j, long n) const {
        auto& o = p_.at(size_t(j)).at(size_t(n));
        if (!o) throw std::logic_error("FESystem: P cell read before write");
        return *o;
    }

    // the three tables, all capped at total order n (the top internal level
    // n+1 backs the residual checks but is not part of the published object)
    SolvedTriple published() const {
        SolvedTriple out;
        out.kind = kind_;
        out.order = n_;
        out.x_out = xout_;
        out.P = TotalSeries(n_);
        out.C = TotalSeries(n_);
        out.D = TotalSeries(n_);
        for (long j = 0; j <= n_; ++j)
            for (long n = 0; j + n <= n_; ++n) {
                out.P.cell(j, n) = XLaurent(p(j, n));
                out.C.cell(j, n) = c(j, n);
                const Cell& dc = cell(d_, j, n);
                if (dc.hi < xout_) throw std::logic_error("FESystem: published D range not exact");
                out.D.cell(j, n) = dc.v.truncated_above(xout_);
            }
        return out;
    }

    // main counting series; valid through t-order n-1
    USeries extract_Q() const {
        if (n_ < 1) throw std::domain_error("extract_Q: order too small");
        USeries q(n_ - 1);
        for (long n = 0; n <= n_ - 1; ++n) {
            Rational v = p(1, n);
            if (n == 0) v -= Rational(1);
            q.set_coeff(n, v);
        }
        return q;
    }

    // every defining equation, re-evaluated with generic series operations on
    // the finished tables; throws on the first violated cell
    void verify_residuals() const {
        if (kind_ == SystemKind::Quartic)
            residuals_quartic();
        else
            residuals_colourful();
    }

    // compare against the closed-form triple of the matching family, mapping
    // solver cell (j, n) to the scaled cell (j, n + j) (n + j + 1 for P).
    CrossReport cross_validate(const ClosedTriple& cf) const {
        CrossReport rep;
        Family want = kind_ == SystemKind::Quartic ? Family::Quartic : Family::General;
        if (cf.family != want) throw std::invalid_argument("cross_validate: family mismatch");
        auto mismatch = [&](const char* table, long j, long n, long xe, const Rational& a, const Rational& b) {
            if (!rep.first_mismatch.empty()) return;
            std::ostringstream os;
            os << table << " cell (" << j << "," << n << ") x^" << xe << ": solver " << a << " vs closed form " << b;
            rep.first_mismatch = os.str();
            rep.identical = false;
        };
        long xcmp = std::min(xout_, cf.x_max);
        for (long j = 0; j <= n_ + 1; ++j)
            for (long n = 0; j + n <= n_ + 1; ++n) {
                if (j + n <= n_ && n + j + 1 <= cf.t_order) {
                    ++rep.cells_compared;
                    const Rational& a = p(j, n);
                    Rational b = cf.P.cell(j, n + j + 1).coeff(0);
                    if (a != b) mismatch("P", j, n, 0, a, b);
                }
                if (n + j > cf.t_order) continue;
                const XLaurent& cc = c(j, n);
                const XLaurent& cfc = cf.C.cell(j, n + j);
                ++rep.cells_compared;
                for (long k = std::min(cc.lo(), cfc.lo()); k <= std::max(cc.hi(), cfc.hi()); ++k)
                    if (cc.coeff(k) != cfc.coeff(k)) mismatch("C", j, n, k, cc.coeff(k), cfc.coeff(k));
                if (!has_d(j, n)) continue;
                ++rep.cells_compared;
                const Cell& dc = cell(d_, j, n);
                const XLaurent& cfd = cf.D.cell(j, n + j);
                for (long k = 0; k <= xcmp; ++k)
                    if (dc.v.coeff(k) != cfd.coeff(k)) mismatch("D", j, n, k, dc.v.coeff(k), cfd.coeff(k));
            }
        return rep;
    }

private:
    struct Cell {
        XLaurent v;
        long hi = -1;
    };

    static const Cell& cell(const std::vector<std::vector<std::optional<Cell>>>& g, long j, long n) {
        auto& o = g.at(size_t(j)).at(size_t(n));
        if (!o) throw std::logic_error("FESystem: cell read before write");
        return *o;
    }
    bool has_d(long j, long n) const {
        return j < long(d_.size()) && n < long(d_[size_t(j)].size()) && d_[size_t(j)][size_t(n)].has_value();
    }

    // exact range of a product: a is exact on [lo(a), a.hi] and vanishes
    // below lo(a); symmetrically for b
    static long mul_hi(const Cell& a, const Cell& b) {
        long loa = a.v.is_zero() ? 0 : a.v.lo();
        long lob = b.v.is_zero() ? 0 : b.v.lo();
        return std::min(a.hi + lob, b.hi + loa);
    }

    void put_d(long j, long n, XLaurent v, long hi) {
        if (!v.all_integer() || !v.all_nonneg()) throw std::logic_error("FESystem: D cell not a counting series");
        if (v.lo() < 0) throw std::logic_error("FESystem: D cell with negative exponent");
        d_[size_t(j)][size_t(n)] = Cell{std::move(v), hi};
    }
    void put_c(long j, long n, XLaurent v) {
        if (!v.all_integer() || !v.all_nonneg()) throw std::logic_error("FESystem: C cell not a counting series");
        if (!v.is_zero() && v.lo() < 1) throw std::logic_error("FESystem: C cell without x factor");
        c_[size_t(j)][size_t(n)] = std::move(v);
    }
    void put_p(long j, long n, Rational v) {
        if (!v.is_integer() || v.sign() < 0) throw std::logic_error("FESystem: P cell not a counting series");
        p_[size_t(j)][size_t(n)] = std::move(v);
    }

    // ---- quartic schedule -------------------------------------------------
    //
    // The y-extraction of the D equation gives, for j >= 2 and n = L - j,
    //   d_{j,n} = [x >= 0]( sum d_{j-1,m} d_{1,m'} + sum p_{i,m} x^{-(i+1)} d_{j-1,m'} ),
    // vacuous at j = 1, where instead the root-degree equation
    //   (1-x) d_{1,n} = [n=0] + 2 d_{2,n-1} - sum_{a+b=n-1} d_{1,a} d_{1,b}
    // pins the y^1 row. C is then recovered from w = 1 - 1/D by undoing the
    // substitution: w(x/(1+x)) must be a polynomial (asserted with margin),
    // and shifting that polynomial by x -> x-1 yields the C cell. Finally
    // P is read off as the x^1 coefficient of C one level up.
    void run_quartic() {
        put_d(0, 0, XLaurent(Rational(1)), w_);
        invd_[0][0] = Cell{XLaurent(Rational(1)), w_};
        for (long n = 1; n <= n_ + 1; ++n) {
            put_d(0, n, XLaurent(), w_);
            c_[0][size_t(n)] = XLaurent();
        }
        c_[0][0] = XLaurent();
        for (long L = 1; L <= n_ + 1; ++L) {
            for (long j = L; j >= 2; --j) {
                long n = L - j;
                XLaurent acc;
                long hi = w_;
                for (long m = 0; m <= n; ++m) {
                    const Cell& a = cell(d_, j - 1, m);
                    const Cell& b = cell(d_, 1, n - m);
                    if (a.v.is_zero() || b.v.is_zero()) continue;
                    acc += a.v * b.v;
                    hi = std::min(hi, mul_hi(a, b));
                }
                for (long i = 0; i <= n; ++i)
                    for (long m = 0; i + m <= n; ++m) {
                        const Rational& pv = p(i, m);
                        if (pv.is_zero()) continue;
                        const Cell& b = cell(d_, j - 1, n - i - m);
                        if (b.v.is_zero()) continue;
                        acc += pv * b.v.shifted(-(i + 1));
                        hi = std::min(hi, b.hi - (i + 1));
                    }
                put_d(j, n, acc.nonneg_part().truncated_above(hi), hi);
            }
            {
                long n = L - 1;
                XLaurent rhs;
                long hi = w_;
                if (n == 0) rhs = XLaurent(Rational(1));
                if (n >= 1) {
                    const Cell& two = cell(d_, 2, n - 1);
                    rhs += Rational(2) * two.v;
                    hi = std::min(hi, two.hi);
                    for (long a = 0; a + 1 <= n; ++a) {
                        const Cell& u = cell(d_, 1, a);
                        const Cell& v = cell(d_, 1, n - 1 - a);
                        if (u.v.is_zero() || v.v.is_zero()) continue;
                        rhs -= u.v * v.v;
                        hi = std::min(hi, mul_hi(u, v));
                    }
                }
                put_d(1, n, rhs.prefix_sum(hi), hi);
            }
            // 1/D cells at this level, then w = 1 - 1/D
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                long hi = w_;
                for (long j1 = 0; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        if (j1 + n1 == 0) continue;
                        const Cell& a = cell(d_, j1, n1);
                        const Cell& b = cell(invd_, j - j1, n - n1);
                        if (a.v.is_zero() || b.v.is_zero()) continue;
                        acc += a.v * b.v;
                        hi = std::min(hi, mul_hi(a, b));
                    }
                invd_[size_t(j)][size_t(n)] = Cell{(-acc).truncated_above(hi), hi};
            }
            for (long j = 1; j <= L; ++j) {
                long n = L - j;
                const Cell& wc = *invd_[size_t(j)][size_t(n)];
                XLaurent wser = -wc.v; // w cell
                XLaurent pser = wser.subst_x_over_one_plus_x(wc.hi);
                long deg = pser.degree();
                // the substituted cell is a polynomial whose degree stays far
                // below the exact window; a tail reaching the window would
                // mean the window was too small for this order
                if (deg > 1 + 4 * n) throw std::logic_error("FESystem: C-cell degree bound violated");
                if (deg + 2 > wc.hi) throw std::logic_error("FESystem: window too small to isolate C cell");
                put_c(j, n, pser.subst_x_minus_one());
            }
            for (long j = 0; j + 1 <= L; ++j) {
                long n = L - 1 - j;
                put_p(j, n, c(j + 1, n).coeff(1));
            }
            if (L == 1 && p(0, 0) != Rational(1)) throw std::logic_error("FESystem: empty patch count wrong");
        }
    }

    // ---- colourful schedule -----------------------------------------------
    //
    // Here the C equation determines each C cell from strictly lower data,
    //   c_{j,n}[x^{q+1}] = sum_{i >= q, i+m+m' = n} p_{i,m} d_{j-1,m'}[x^{i-q}],
    // D follows from D = 1 + C(t, 1/(1-x), y) D, and the y-extraction of the
    // P equation gives p_{j,n} = sum p_{i,m} d_{j,m'}[x^i]. No negative
    // powers of x ever reach a window edge, so every cell is exact on [0, W].
    void run_colourful() {
        put_d(0, 0, XLaurent(Rational(1)), w_);
        put_p(0, 0, Rational(1));
        for (long n = 1; n <= n_ + 1; ++n) {
            if (n <= n_) {
                put_d(0, n, XLaurent(), w_);
                put_p(0, n, Rational(0));
            }
            c_[0][size_t(n)] = XLaurent();
        }
        c_[0][0] = XLaurent();
        for (long L = 1; L <= n_ + 1; ++L) {
            for (long j = 1; j <= L; ++j) colourful_c_cell(j, L - j);
            if (L > n_) break; // only C is needed on the top level
            for (long j = 1; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                long hi = w_;
                for (long j1 = 1; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        const XLaurent& cc = c(j1, n1);
                        if (cc.is_zero()) continue;
                        const Cell& b = cell(d_, j - j1, n - n1);
                        if (b.v.is_zero()) continue;
                        XLaurent e = cc.subst_one_over_one_minus_x(w_);
                        acc += e * b.v;
                        hi = std::min(hi, b.hi); // e is exact on all of [0, W]
                    }
                put_d(j, n, acc.truncated_above(hi), hi);
            }
            for (long j = 1; j <= L; ++j) {
                long n = L - j;
                Rational acc(0);
                for (long i = 0; i <= n; ++i)
                    for (long m = 0; i + m <= n; ++m) {
                        const Rational& pv = p(i, m);
                        if (pv.is_zero()) continue;
                        const Cell& b = cell(d_, j, n - i - m);
                        if (b.hi < i) throw std::logic_error("FESystem: P read beyond exact range");
                        acc.add_mul(pv, b.v.coeff(i));
                    }
                put_p(j, n, acc);
            }
        }
    }

    void colourful_c_cell(long j, long n) {
        XLaurent out;
        for (long q = 0; q <= n; ++q) {
            Rational acc(0);
            for (long i = q; i <= n; ++i)
                for (long m = 0; i + m <= n; ++m) {
                    const Rational& pv = p(i, m);
                    if (pv.is_zero()) continue;
                    const Cell& b = cell(d_, j - 1, n - i - m);
                    if (b.hi < i - q) throw std::logic_error("FESystem: C read beyond exact range");
                    acc.add_mul(pv, b.v.coeff(i - q));
                }
            out.add_term(q + 1, acc);
        }
        put_c(j, n, out);
    }

    // ---- residual checks ----------------------------------------------------

    void check_zero(const XLaurent& res, long lo, long hi, const char* what, long j, long n) const {
        for (long k = lo; k <= hi; ++k)
            if (!res.coeff(k).is_zero()) {
                std::ostringstream os;
                os << "residual " << what << " nonzero at cell (" << j << "," << n << ") x^" << k;
                throw std::logic_error(os.str());
            }
    }

    void residuals_quartic() const {
        // P definition: p_{j,n} = [x^1] c_{j+1,n}
        for (long j = 0; j <= n_; ++j)
            for (long n = 0; j + n <= n_; ++n)
                if (p(j, n) != c(j + 1, n).coeff(1)) throw std::logic_error("residual P nonzero");
        // D = 1 + C(t, 1/(1-x), y) D
        for (long L = 1; L <= n_ + 1; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                long hi = cell(d_, j, n).hi;
                for (long j1 = 1; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        const XLaurent& cc = c(j1, n1);
                        if (cc.is_zero()) continue;
                        const Cell& b = cell(d_, j - j1, n - n1);
                        acc += cc.subst_one_over_one_minus_x(w_) * b.v;
                        hi = std::min(hi, b.hi);
                    }
                check_zero(acc - d(j, n), 0, hi, "D-equation", j, n);
            }
        // D equation in its y-extracted form, including the vacuous j = 1 row
        for (long L = 1; L <= n_ + 1; ++L)
            for (long j = 1; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                long hi = cell(d_, j, n).hi;
                for (long m = 0; m <= n; ++m) {
                    const Cell& a = cell(d_, j - 1, m);
                    const Cell& b = cell(d_, 1, n - m);
                    acc += a.v * b.v;
                    hi = std::min(hi, mul_hi(a, b));
                }
                for (long i = 0; i <= n; ++i)
                    for (long m = 0; i + m <= n; ++m) {
                        const Cell& b = cell(d_, j - 1, n - i - m);
                        acc += p(i, m) * b.v.shifted(-(i + 1));
                        hi = std::min(hi, b.hi - (i + 1));
                    }
                check_zero(acc.nonneg_part() - d(j, n), 0, hi, "D-recursion", j, n);
            }
        // root-degree equation on the y^1 row, multiplicative form
        for (long n = 0; n <= n_; ++n) {
            XLaurent one_minus_x;
            one_minus_x.add_term(0, Rational(1));
            one_minus_x.add_term(1, Rational(-1));
            const Cell& dn = cell(d_, 1, n);
            XLaurent lhs = one_minus_x * dn.v;
            XLaurent rhs;
            long hi = dn.hi;
            if (n == 0) rhs = XLaurent(Rational(1));
            if (n >= 1) {
                const Cell& two = cell(d_, 2, n - 1);
                rhs += Rational(2) * two.v;
                hi = std::min(hi, two.hi);
                for (long a = 0; a + 1 <= n; ++a) {
                    const Cell& u = cell(d_, 1, a);
                    const Cell& v = cell(d_, 1, n - 1 - a);
                    rhs -= u.v * v.v;
                    hi = std::min(hi, mul_hi(u, v));
                }
            }
            check_zero(lhs - rhs, 0, hi, "root-degree equation", 1, n);
        }
    }

    void residuals_colourful() const {
        // P definition: p_{j,n} = [x^1] c_{j+1,n}; genuine here because the
        // solver never used it in this direction
        for (long j = 0; j <= n_; ++j)
            for (long n = 0; j + n <= n_; ++n)
                if (p(j, n) != c(j + 1, n).coeff(1)) throw std::logic_error("residual P nonzero");
        // D = 1 + C(t, 1/(1-x), y) D
        for (long L = 1; L <= n_; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                long hi = cell(d_, j, n).hi;
                for (long j1 = 1; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        const XLaurent& cc = c(j1, n1);
                        if (cc.is_zero()) continue;
                        const Cell& b = cell(d_, j - j1, n - n1);
                        acc += cc.subst_one_over_one_minus_x(w_) * b.v;
                        hi = std::min(hi, b.hi);
                    }
                check_zero(acc - d(j, n), 0, hi, "D-equation", j, n);
            }
        // C = x y [x >= 0]( P(t, tx) D(t, 1/x, y) ); the mirrored D cells are
        // read only on [-n, 0], well inside their exact window
        for (long L = 1; L <= n_ + 1; ++L)
            for (long j = 1; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                for (long tau = 0; tau <= n; ++tau) {
                    XLaurent row;
                    for (long i = 0; i <= tau; ++i) row.add_term(i, p(i, tau - i));
                    if (row.is_zero()) continue;
                    const Cell& b = cell(d_, j - 1, n - tau);
                    if (b.v.is_zero()) continue;
                    acc += row * b.v.reversed_exponents();
                }
                check_zero(acc.nonneg_part().shifted(1) - c(j, n), 0, n + 1, "C-equation", j, n);
            }
    }

    SystemKind kind_ = SystemKind::Quartic;
    long n_ = 0, w_ = 0, xout_ = 0;
    std::vector<std::vector<std::optional<Cell>>> d_, invd_;
    std::vector<std::vector<std::optional<XLaurent>>> c_;
    std::vector<std::vector<std::optional<Rational>>> p_;
};

} // namespace eo
