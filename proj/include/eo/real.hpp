#pragma once

// Thin RAII layer over MPFR binary floats. Every value carries its own
// precision; binary operations compute at the larger operand precision with
// round-to-nearest. At the precisions used here (256 bits and up) the
// accumulated rounding is far below every tolerance in the test suite.

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "numeric.hpp"

namespace eo {

class Real {
public:
    explicit Real(long prec = 256) {
        if (prec < 2) throw std::invalid_argument("Real: precision too small");
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long value, long prec) : Real(prec) { mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(const Rational& q, long prec) : Real(prec) {
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    Real(const Real& o) : Real(o.prec()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pi(long prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real from_integer(const Integer& n, long prec) {
        Real r(prec);
        mpfr_set_z(r.v_, n.raw(), MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    Real sqrt() const { return un(*this, mpfr_sqrt); }
    Real log() const { return un(*this, mpfr_log); }
    Real exp() const { return un(*this, mpfr_exp); }
    Real abs() const { return un(*this, mpfr_abs); }
    Real sin() const { return un(*this, mpfr_sin); }
    Real cos() const { return un(*this, mpfr_cos); }
    Real acos() const { return un(*this, mpfr_acos); }
    Real pow_ui(unsigned long e) const {
        Real r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // fixed scientific form with the requested number of significant
    // digits, deterministic across runs
    std::string to_string(long sig_digits = 20) const {
        if (sig_digits < 2) throw std::invalid_argument("Real::to_string: need >= 2 digits");
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
        if (is_zero()) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, size_t(sig_digits), v_, MPFR_RNDN);
        std::string digits(s);
        mpfr_free_str(s);
        std::string sign_part;
        if (!digits.empty() && digits[0] == '-') {
            sign_part = "-";
            digits.erase(0, 1);
        }
        // digits are 0.d1d2... * 10^e
        std::string out = sign_part + digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(long(e) - 1);
        return out;
    }

private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(const Real& a, const Real& b, BinOp op) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(const Real& a, UnOp op) {
        Real r(a.prec());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

} // namespace eo
