#pragma once

// Bivariate series in (y, t) truncated by total degree j + n <= order, with
// coefficients that are Laurent polynomials in x. The total-degree grading is
// what makes the catalytic fixed-point systems triangular: every product of
// positive-level cells lands in a strictly higher level.

#include <functional>
#include <stdexcept>
#include <vector>

#include "uniseries.hpp"
#include "xlaurent.hpp"

namespace eo {

class TotalSeries {
public:
    TotalSeries() : order_(-1) {}
    explicit TotalSeries(long order) : order_(order) {
        if (order < 0) throw std::invalid_argument("TotalSeries: negative order");
        cells_.resize(size_t(order + 1) * size_t(order + 1));
    }
    static TotalSeries constant(long order, const Rational& c) {
        TotalSeries s(order);
        s.cell(0, 0) = XLaurent(c);
        return s;
    }

    long order() const { return order_; }
    bool in_range(long j, long n) const { return j >= 0 && n >= 0 && j + n <= order_; }

    const XLaurent& cell(long j, long n) const {
        check(j, n);
        return cells_[idx(j, n)];
    }
    XLaurent& cell(long j, long n) {
        check(j, n);
        return cells_[idx(j, n)];
    }
    // out-of-range reads are zero, which matches the truncation semantics
    const XLaurent& cell_or_zero(long j, long n) const {
        static const XLaurent zero;
        if (!in_range(j, n)) return zero;
        return cells_[idx(j, n)];
    }

    bool is_zero() const {
        for (const auto& c : cells_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TotalSeries operator+(const TotalSeries& a, const TotalSeries& b) {
        TotalSeries r(std::min(a.order_, b.order_));
        r.for_each([&](long j, long n, XLaurent& c) { c = a.cell(j, n) + b.cell(j, n); });
        return r;
    }
    friend TotalSeries operator-(const TotalSeries& a, const TotalSeries& b) {
        TotalSeries r(std::min(a.order_, b.order_));
        r.for_each([&](long j, long n, XLaurent& c) { c = a.cell(j, n) - b.cell(j, n); });
        return r;
    }
    friend TotalSeries operator-(const TotalSeries& a) {
        TotalSeries r = a;
        for (auto& c : r.cells_) c = -c;
        return r;
    }
    friend TotalSeries operator*(const TotalSeries& a, const TotalSeries& b) {
        TotalSeries r(std::min(a.order_, b.order_));
        for (long L = 0; L <= r.order_; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                for (long j1 = 0; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        const XLaurent& ca = a.cell(j1, n1);
                        if (ca.is_zero()) continue;
                        const XLaurent& cb = b.cell(j - j1, n - n1);
                        if (cb.is_zero()) continue;
                        acc += ca * cb;
                    }
                r.cell(j, n) = acc;
            }
        return r;
    }
    friend TotalSeries operator*(const Rational& s, const TotalSeries& a) {
        TotalSeries r = a;
        for (auto& c : r.cells_) c = s * c;
        return r;
    }
    TotalSeries& operator+=(const TotalSeries& o) { return *this = *this + o; }
    TotalSeries& operator-=(const TotalSeries& o) { return *this = *this - o; }

    friend bool operator==(const TotalSeries& a, const TotalSeries& b) {
        return a.order_ == b.order_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const TotalSeries& a, const TotalSeries& b) { return !(a == b); }

    TotalSeries truncated(long new_order) const {
        if (new_order > order_) throw std::domain_error("TotalSeries: cannot extend truncation order");
        TotalSeries r(new_order);
        r.for_each([&](long j, long n, XLaurent& c) { c = cell(j, n); });
        return r;
    }

    // multiply by y (shift j by one); the top layer falls off the truncation
    TotalSeries times_y() const {
        TotalSeries r(order_);
        r.for_each([&](long j, long n, XLaurent& c) {
            if (j >= 1) c = cell(j - 1, n);
        });
        return r;
    }
    // multiply by t
    TotalSeries times_t() const {
        TotalSeries r(order_);
        r.for_each([&](long j, long n, XLaurent& c) {
            if (n >= 1) c = cell(j, n - 1);
        });
        return r;
    }

    TotalSeries map_cells(const std::function<XLaurent(const XLaurent&)>& f) const {
        TotalSeries r(order_);
        r.for_each([&](long j, long n, XLaurent& c) { c = f(cell(j, n)); });
        return r;
    }

    // the coefficient of x^k, as a series in (y, t) with scalar cells
    TotalSeries coeff_x(long k) const {
        return map_cells([&](const XLaurent& c) { return XLaurent(c.coeff(k)); });
    }
    TotalSeries nonneg_part_x() const {
        return map_cells([](const XLaurent& c) { return c.nonneg_part(); });
    }
    TotalSeries neg_part_x() const {
        return map_cells([](const XLaurent& c) { return c.neg_part(); });
    }
    // substitute x -> 1/(1-x), expanding each polynomial cell up to x^max_exp
    TotalSeries subst_x_to_1_over_1_minus_x(long max_exp) const {
        return map_cells([&](const XLaurent& c) { return c.subst_one_over_one_minus_x(max_exp); });
    }
    // the y-row at index j, reinterpreted as a series with y-degree zero
    TotalSeries y_row(long j) const {
        TotalSeries r(order_);
        r.for_each([&](long a, long n, XLaurent& c) {
            if (a == 0 && in_range(j, n)) c = cell(j, n);
        });
        return r;
    }

    // exp of a series with zero constant cell, by the Euler-operator
    // recurrence: with theta = y d/dy + t d/dt, theta(exp s) = theta(s) exp(s),
    // so L F_{j,n} = sum over levels 1..L of (j'+n') s_{j',n'} F_{j-j',n-n'}.
    TotalSeries exp_series() const {
        if (!cell(0, 0).is_zero()) throw std::domain_error("TotalSeries::exp_series: nonzero constant cell");
        TotalSeries f(order_);
        f.cell(0, 0) = XLaurent(Rational(1));
        for (long L = 1; L <= order_; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                f.cell(j, n) = Rational(1, L) * theta_convolve(*this, f, j, n, L);
            }
        return f;
    }
    // inverse of exp_series; requires constant cell 1
    TotalSeries log_series() const {
        if (cell(0, 0) != XLaurent(Rational(1)))
            throw std::domain_error("TotalSeries::log_series: constant cell must be 1");
        TotalSeries s(order_);
        for (long L = 1; L <= order_; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                s.cell(j, n) = cell(j, n) - Rational(1, L) * theta_convolve(s, *this, j, n, L - 1);
            }
        return s;
    }

    // 1/(1-s) for s with zero constant cell: d = 1 + s d level by level
    TotalSeries reciprocal_one_minus() const {
        if (!cell(0, 0).is_zero())
            throw std::domain_error("TotalSeries::reciprocal_one_minus: nonzero constant cell");
        TotalSeries d(order_);
        d.cell(0, 0) = XLaurent(Rational(1));
        for (long L = 1; L <= order_; ++L)
            for (long j = 0; j <= L; ++j) {
                long n = L - j;
                XLaurent acc;
                for (long j1 = 0; j1 <= j; ++j1)
                    for (long n1 = 0; n1 <= n; ++n1) {
                        if (j1 + n1 == 0 || j1 + n1 == L) continue; // s has no constant, d term must be below L
                        const XLaurent& cs = cell(j1, n1);
                        if (cs.is_zero()) continue;
                        const XLaurent& cd = d.cell(j - j1, n - n1);
                        if (cd.is_zero()) continue;
                        acc += cs * cd;
                    }
                // the j1+n1 == L pairing hits d's constant cell 1
                acc += cell(j, n);
                d.cell(j, n) = acc;
            }
        return d;
    }

    enum class ComposeP { t_over_x, t_times_x };
    // substitute y -> t/x (or t*x) into a pure-y series: the cell (i, m) with
    // scalar value p becomes p x^{-i} (resp. p x^{i}) at cell (0, i+m).
    TotalSeries laurent_compose_P(ComposeP mode) const {
        TotalSeries r(order_);
        for (long i = 0; i + 0 <= order_; ++i)
            for (long m = 0; i + m <= order_; ++m) {
                const XLaurent& c = cell(i, m);
                if (c.is_zero()) continue;
                if (c.lo() != 0 || c.hi() != 0)
                    throw std::domain_error("laurent_compose_P: input must be free of x");
                long e = (mode == ComposeP::t_over_x) ? -i : i;
                r.cell(0, i + m) += XLaurent::term(e, c.coeff(0));
            }
        return r;
    }

    template <typename F> void for_each(F&& f) {
        for (long j = 0; j <= order_; ++j)
            for (long n = 0; j + n <= order_; ++n) f(j, n, cells_[idx(j, n)]);
    }
    template <typename F> void for_each(F&& f) const {
        for (long j = 0; j <= order_; ++j)
            for (long n = 0; j + n <= order_; ++n) f(j, n, cells_[idx(j, n)]);
    }

private:
    size_t idx(long j, long n) const { return size_t(j) * size_t(order_ + 1) + size_t(n); }
    void check(long j, long n) const {
        if (!in_range(j, n)) throw std::out_of_range("TotalSeries: cell outside truncation");
    }

    // sum over s-levels 1..lmax of (j'+n') s_{j',n'} f_{j-j',n-n'}; the Euler
    // operator theta = y d/dy + t d/dt acts as multiplication by the level
    static XLaurent theta_convolve(const TotalSeries& s, const TotalSeries& f, long j, long n, long lmax) {
        XLaurent acc;
        for (long j1 = 0; j1 <= j; ++j1)
            for (long n1 = 0; n1 <= n; ++n1) {
                long lev = j1 + n1;
                if (lev < 1 || lev > lmax) continue;
                const XLaurent& cs = s.cell(j1, n1);
                if (cs.is_zero()) continue;
                const XLaurent& cf = f.cell(j - j1, n - n1);
                if (cf.is_zero()) continue;
                acc += Rational(lev) * (cs * cf);
            }
        return acc;
    }

    long order_;
    std::vector<XLaurent> cells_;
};

} // namespace eo
