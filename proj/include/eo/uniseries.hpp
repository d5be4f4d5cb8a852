#pragma once

// Univariate truncated power series over Rational. A series of order N
// tracks coefficients of t^0..t^N exactly; everything above is unknown,
// not zero, so coeff() refuses to read past the order.

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace eo {

class USeries {
public:
    explicit USeries(long order = 0) : c_(size_t(order) + 1) {
        if (order < 0) throw std::invalid_argument("USeries: negative order");
    }
    USeries(std::initializer_list<Rational> coeffs) : c_(coeffs) {
        if (c_.empty()) c_.assign(1, Rational(0));
    }
    static USeries monomial(long k, long order, const Rational& value = Rational(1)) {
        USeries s(order);
        if (k <= order) s.c_[size_t(k)] = value;
        return s;
    }
    static USeries identity(long order) { return monomial(1, order); }

    long order() const { return long(c_.size()) - 1; }
    const Rational& coeff(long k) const {
        if (k < 0 || k > order()) throw std::out_of_range("USeries::coeff: k=" + std::to_string(k));
        return c_[size_t(k)];
    }
    void set_coeff(long k, const Rational& v) {
        if (k < 0 || k > order()) throw std::out_of_range("USeries::set_coeff");
        c_[size_t(k)] = v;
    }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    // Smallest exponent with nonzero coefficient; order()+1 when all tracked
    // coefficients vanish.
    long valuation() const {
        for (long k = 0; k <= order(); ++k)
            if (!c_[size_t(k)].is_zero()) return k;
        return order() + 1;
    }
    USeries truncated(long new_order) const {
        if (new_order > order()) throw std::invalid_argument("USeries::truncated: cannot extend");
        USeries r(new_order);
        for (long k = 0; k <= new_order; ++k) r.c_[size_t(k)] = c_[size_t(k)];
        return r;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        long n = std::min(a.order(), b.order());
        USeries r(n);
        for (long k = 0; k <= n; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
        return r;
    }
    friend USeries operator-(const USeries& a, const USeries& b) {
        long n = std::min(a.order(), b.order());
        USeries r(n);
        for (long k = 0; k <= n; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] - b.c_[size_t(k)];
        return r;
    }
    friend USeries operator-(const USeries& a) {
        USeries r(a.order());
        for (long k = 0; k <= a.order(); ++k) r.c_[size_t(k)] = -a.c_[size_t(k)];
        return r;
    }
    friend USeries operator*(const USeries& a, const USeries& b) {
        long n = std::min(a.order(), b.order());
        USeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (a.c_[size_t(i)].is_zero()) continue;
            for (long j = 0; i + j <= n; ++j) r.c_[size_t(i + j)].add_mul(a.c_[size_t(i)], b.c_[size_t(j)]);
        }
        return r;
    }
    friend USeries operator*(const Rational& s, const USeries& a) {
        USeries r(a.order());
        for (long k = 0; k <= a.order(); ++k) r.c_[size_t(k)] = s * a.c_[size_t(k)];
        return r;
    }

    // 1/this; requires an invertible constant term.
    USeries reciprocal() const {
        if (c_[0].is_zero()) throw std::domain_error("USeries::reciprocal: zero constant term");
        long n = order();
        USeries r(n);
        Rational inv0 = Rational(1) / c_[0];
        r.c_[0] = inv0;
        for (long k = 1; k <= n; ++k) {
            Rational acc(0);
            for (long j = 1; j <= k; ++j) acc.add_mul(c_[size_t(j)], r.c_[size_t(k - j)]);
            r.c_[size_t(k)] = -inv0 * acc;
        }
        return r;
    }

    // a/b, allowing a common valuation shift so e.g. (t^3 + ...)/(t^2) works.
    friend USeries operator/(const USeries& a, const USeries& b) {
        long vb = b.valuation();
        if (vb > b.order()) throw std::domain_error("USeries: division by zero series");
        if (vb == 0) return a * b.reciprocal();
        long va = a.valuation();
        if (va < vb) throw std::domain_error("USeries: quotient is not a power series");
        long n = std::min(a.order(), b.order()) - vb;
        USeries as(n), bs(n);
        for (long k = 0; k <= n; ++k) {
            as.c_[size_t(k)] = a.c_[size_t(k + vb)];
            bs.c_[size_t(k)] = b.c_[size_t(k + vb)];
        }
        return as * bs.reciprocal();
    }

    USeries derivative() const {
        long n = order();
        USeries r(n == 0 ? 0 : n - 1);
        for (long k = 1; k <= n; ++k) r.c_[size_t(k - 1)] = Rational(k) * c_[size_t(k)];
        return r;
    }
    // Antiderivative with zero constant term.
    USeries integral() const {
        long n = order();
        USeries r(n + 1);
        for (long k = 0; k <= n; ++k) r.c_[size_t(k + 1)] = c_[size_t(k)] / Rational(k + 1);
        return r;
    }

    // this(g), Horner from the top. Needs g(0) = 0 for the truncation to be honest.
    USeries compose(const USeries& g) const {
        if (!g.c_[0].is_zero()) throw std::domain_error("USeries::compose: inner constant term nonzero");
        long n = std::min(order(), g.order());
        USeries gt = g.truncated(n);
        USeries r(n);
        r.c_[0] = c_[size_t(n)];
        for (long k = n - 1; k >= 0; --k) {
            r = r * gt;
            r.c_[0] += c_[size_t(k)];
        }
        return r;
    }

    // exp(this) for series with zero constant term, via E' = f'E.
    USeries exp_series() const {
        if (!c_[0].is_zero()) throw std::domain_error("USeries::exp_series: nonzero constant term");
        long n = order();
        USeries r(n);
        r.c_[0] = Rational(1);
        for (long k = 1; k <= n; ++k) {
            Rational acc(0);
            for (long j = 1; j <= k; ++j) acc.add_mul(Rational(j) * c_[size_t(j)], r.c_[size_t(k - j)]);
            r.c_[size_t(k)] = acc / Rational(k);
        }
        return r;
    }
    // log(this) for series with constant term 1.
    USeries log_series() const {
        if (c_[0] != Rational(1)) throw std::domain_error("USeries::log_series: constant term must be 1");
        USeries d = derivative() * reciprocal().truncated(order() == 0 ? 0 : order() - 1);
        return d.integral().truncated(order());
    }

    USeries pow_int(long e) const {
        if (e < 0) return reciprocal().pow_int(-e);
        USeries r = monomial(0, order());
        USeries base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Functional inverse g with this(g(t)) = t, for series t*(unit). Newton
    // iteration with doubling precision. If g is right mod t^(cur+1) then
    // f(g)-t vanishes through t^cur, so the correction err/f'(g) only needs
    // the slope to order next-cur-1.
    USeries reversion() const {
        if (!c_[0].is_zero() || c_.size() < 2 || c_[1].is_zero())
            throw std::domain_error("USeries::reversion: need valuation exactly 1");
        long n = order();
        USeries g{Rational(0), Rational(1) / c_[1]};
        long cur = 1;
        while (cur < n) {
            long next = std::min(2 * cur, n);
            USeries gx(next);
            for (long k = 0; k <= cur; ++k) gx.c_[size_t(k)] = g.c_[size_t(k)];
            USeries err = truncated(next).compose(gx) - USeries::identity(next);
            for (long k = 0; k <= cur; ++k) assert(err.coeff(k).is_zero());
            long m = next - cur - 1;
            USeries inv = derivative().truncated(m).compose(gx.truncated(m)).reciprocal();
            USeries upd(next);
            for (long k = cur + 1; k <= next; ++k) {
                Rational acc(0);
                for (long i = cur + 1; i <= k; ++i)
                    if (k - i <= m) acc.add_mul(err.coeff(i), inv.coeff(k - i));
                upd.c_[size_t(k)] = acc;
            }
            g = gx - upd;
            cur = next;
        }
        return g;
    }

    friend bool operator==(const USeries& a, const USeries& b) {
        if (a.order() != b.order()) return false;
        for (long k = 0; k <= a.order(); ++k)
            if (a.c_[size_t(k)] != b.c_[size_t(k)]) return false;
        return true;
    }
    friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

private:
    std::vector<Rational> c_;
};

// Independent check on reversion: coefficient n of the inverse of f = t*u(t)
// is (1/n) [t^(n-1)] u(t)^(-n), straight from the residue formula. Quadratic
// per coefficient but only ever used as an oracle at modest orders.
inline Rational lagrange_reversion_coeff(const USeries& f, long n) {
    if (n < 1) return Rational(0);
    if (f.coeff(0) != Rational(0) || f.coeff(1).is_zero())
        throw std::domain_error("lagrange_reversion_coeff: need valuation exactly 1");
    USeries u(n - 1);
    for (long k = 0; k <= n - 1; ++k) u.set_coeff(k, f.coeff(k + 1));
    USeries p = u.reciprocal().pow_int(n);
    return p.coeff(n - 1) / Rational(n);
}

} // namespace eo
