#pragma once

// Laurent polynomials in x with exact rational coefficients, dense storage
// over a contiguous exponent range. Zero is the empty vector; nonzero values
// keep their first and last coefficients nonzero (trimmed).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "numeric.hpp"

namespace eo {

class XLaurent {
public:
    XLaurent() = default;
    explicit XLaurent(const Rational& c0) {
        if (!c0.is_zero()) {
            lo_ = 0;
            c_.push_back(c0);
        }
    }
    static XLaurent term(long exponent, const Rational& coeff) {
        XLaurent r;
        if (!coeff.is_zero()) {
            r.lo_ = exponent;
            r.c_.push_back(coeff);
        }
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return c_.empty() ? 0 : lo_; }
    long hi() const { return c_.empty() ? 0 : lo_ + long(c_.size()) - 1; }
    // degree of the zero polynomial is reported as a very negative sentinel
    long degree() const { return c_.empty() ? kZeroDegree : hi(); }
    static constexpr long kZeroDegree = -1000000000L;

    const Rational& coeff(long k) const {
        static const Rational zero(0);
        if (c_.empty() || k < lo_ || k > hi()) return zero;
        return c_[size_t(k - lo_)];
    }
    void add_term(long exponent, const Rational& v) {
        if (v.is_zero()) return;
        if (c_.empty()) {
            lo_ = exponent;
            c_.push_back(v);
            return;
        }
        if (exponent < lo_) {
            c_.insert(c_.begin(), size_t(lo_ - exponent), Rational(0));
            lo_ = exponent;
        } else if (exponent > hi()) {
            c_.resize(size_t(exponent - lo_ + 1));
        }
        c_[size_t(exponent - lo_)] += v;
        trim();
    }

    friend XLaurent operator+(const XLaurent& a, const XLaurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi(), b.hi());
        XLaurent r;
        r.lo_ = lo;
        r.c_.resize(size_t(hi - lo + 1));
        for (long k = lo; k <= hi; ++k) r.c_[size_t(k - lo)] = a.coeff(k) + b.coeff(k);
        r.trim();
        return r;
    }
    friend XLaurent operator-(const XLaurent& a, const XLaurent& b) { return a + (-b); }
    friend XLaurent operator-(const XLaurent& a) {
        XLaurent r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend XLaurent operator*(const XLaurent& a, const XLaurent& b) {
        if (a.is_zero() || b.is_zero()) return XLaurent();
        XLaurent r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
        }
        r.trim();
        return r;
    }
    friend XLaurent operator*(const Rational& s, const XLaurent& a) {
        if (s.is_zero()) return XLaurent();
        XLaurent r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    XLaurent& operator+=(const XLaurent& o) { return *this = *this + o; }
    XLaurent& operator-=(const XLaurent& o) { return *this = *this - o; }

    friend bool operator==(const XLaurent& a, const XLaurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const XLaurent& a, const XLaurent& b) { return !(a == b); }

    // multiply by x^k
    XLaurent shifted(long k) const {
        XLaurent r = *this;
        if (!r.c_.empty()) r.lo_ += k;
        return r;
    }
    XLaurent nonneg_part() const { return slice(0, hi()); }
    XLaurent neg_part() const { return slice(lo(), -1); }
    XLaurent truncated_above(long max_exp) const { return slice(lo(), max_exp); }
    XLaurent slice(long from, long to) const {
        XLaurent r;
        if (c_.empty()) return r;
        from = std::max(from, lo_);
        to = std::min(to, hi());
        if (from > to) return r;
        r.lo_ = from;
        r.c_.assign(c_.begin() + (from - lo_), c_.begin() + (to - lo_ + 1));
        r.trim();
        return r;
    }

    // multiplication by 1/(1-x) = 1 + x + x^2 + ..., kept up to x^max_exp.
    // Coefficient k of the result is the sum of all input coefficients <= k.
    XLaurent prefix_sum(long max_exp) const {
        XLaurent r;
        if (c_.empty() || max_exp < lo_) return r;
        r.lo_ = lo_;
        r.c_.resize(size_t(max_exp - lo_ + 1));
        Rational acc(0);
        for (long k = lo_; k <= max_exp; ++k) {
            acc += coeff(k);
            r.c_[size_t(k - lo_)] = acc;
        }
        r.trim();
        return r;
    }

    // f(1/(1-x)) expanded as a power series in x up to x^max_exp.
    // Requires a polynomial input (no negative exponents).
    XLaurent subst_one_over_one_minus_x(long max_exp) const {
        if (lo() < 0) throw std::domain_error("XLaurent: substitution needs exponents >= 0");
        XLaurent r;
        if (c_.empty()) return r;
        r.lo_ = 0;
        r.c_.assign(size_t(max_exp + 1), Rational(0));
        // (1-x)^{-k} = sum_m binom(k-1+m, m) x^m for k >= 1; the k = 0 term is 1
        for (long k = lo_; k <= hi(); ++k) {
            const Rational& fk = coeff(k);
            if (fk.is_zero()) continue;
            if (k == 0) {
                r.c_[0] += fk;
                continue;
            }
            for (long m = 0; m <= max_exp; ++m) r.c_[size_t(m)].add_mul(fk, Rational(binom(k - 1 + m, m)));
        }
        r.trim();
        return r;
    }

    // f(x/(1+x)) as a power series in x up to x^max_exp. Triangular in the
    // sense that coefficient q of the result uses only input coefficients
    // <= q, so a truncated input gives the exact truncated output.
    XLaurent subst_x_over_one_plus_x(long max_exp) const {
        if (lo() < 0) throw std::domain_error("XLaurent: substitution needs exponents >= 0");
        XLaurent r;
        if (c_.empty()) return r;
        r.lo_ = 0;
        r.c_.assign(size_t(max_exp + 1), Rational(0));
        // x^k (1+x)^{-k} = sum_m (-1)^m binom(k-1+m, m) x^{k+m}
        for (long k = lo_; k <= std::min(hi(), max_exp); ++k) {
            const Rational& fk = coeff(k);
            if (fk.is_zero()) continue;
            if (k == 0) {
                r.c_[0] += fk;
                continue;
            }
            for (long m = 0; k + m <= max_exp; ++m) {
                Rational b(binom(k - 1 + m, m));
                if (m & 1) b = -b;
                r.c_[size_t(k + m)].add_mul(fk, b);
            }
        }
        r.trim();
        return r;
    }

    // f(x-1), exact polynomial shift.
    XLaurent subst_x_minus_one() const {
        if (lo() < 0) throw std::domain_error("XLaurent: substitution needs exponents >= 0");
        XLaurent r;
        if (c_.empty()) return r;
        r.lo_ = 0;
        r.c_.assign(size_t(hi() + 1), Rational(0));
        for (long k = lo_; k <= hi(); ++k) {
            const Rational& fk = coeff(k);
            if (fk.is_zero()) continue;
            for (long i = 0; i <= k; ++i) {
                Rational b(binom(k, i));
                if ((k - i) & 1) b = -b;
                r.c_[size_t(i)].add_mul(fk, b);
            }
        }
        r.trim();
        return r;
    }

    // mirror x -> 1/x
    XLaurent reversed_exponents() const {
        XLaurent r;
        if (c_.empty()) return r;
        r.lo_ = -hi();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }

    Rational eval(const Rational& x) const {
        if (c_.empty()) return Rational(0);
        if (lo_ < 0 && x.is_zero()) throw std::domain_error("XLaurent::eval: pole at 0");
        // Horner over the stored range, then adjust by x^lo
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        if (lo_ > 0)
            for (long i = 0; i < lo_; ++i) acc *= x;
        else
            for (long i = 0; i < -lo_; ++i) acc /= x;
        return acc;
    }

    bool all_integer() const {
        for (const auto& v : c_)
            if (!v.is_integer()) return false;
        return true;
    }
    bool all_nonneg() const {
        for (const auto& v : c_)
            if (v.sign() < 0) return false;
        return true;
    }

private:
    void trim() {
        size_t front = 0;
        while (front < c_.size() && c_[front].is_zero()) ++front;
        if (front == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        size_t back = c_.size();
        while (back > front && c_[back - 1].is_zero()) --back;
        if (front > 0 || back < c_.size()) {
            std::vector<Rational> keep(c_.begin() + front, c_.begin() + back);
            c_ = std::move(keep);
            lo_ += long(front);
        }
    }

    long lo_ = 0;
    std::vector<Rational> c_;
};

} // namespace eo
