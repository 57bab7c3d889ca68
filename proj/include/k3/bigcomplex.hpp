#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "k3/error.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Arbitrary-precision binary float over MPFR, round-to-nearest
// throughout. Binary operations carry the min precision of the
// operands; values constructed from small integers are marked exact
// (precision 0) and never lower the precision of a result.
class BigFloat {
public:
    static constexpr long kDefaultPrec = 128;
    static constexpr long kExactStorage = 128;

    BigFloat() : prec_(0) {
        mpfr_init2(f_, kExactStorage);
        mpfr_set_zero(f_, 1);
    }
    BigFloat(long v) : prec_(0) {
        mpfr_init2(f_, kExactStorage);
        mpfr_set_si(f_, v, MPFR_RNDN);
    }
    BigFloat(double v, long prec) : prec_(prec) {
        mpfr_init2(f_, storage(prec));
        mpfr_set_d(f_, v, MPFR_RNDN);
    }
    BigFloat(const Rational& v, long prec) : prec_(prec) {
        mpfr_init2(f_, storage(prec));
        mpfr_set_q(f_, v.raw(), MPFR_RNDN);
    }
    static BigFloat from_string(const std::string& s, long prec) {
        BigFloat r(0.0, prec);
        if (mpfr_set_str(r.f_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw Error("ParseError", "not a real number: '" + s + "'");
        return r;
    }
    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(f_, mpfr_get_prec(o.f_));
            prec_ = o.prec_;
            mpfr_set(f_, o.f_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        std::swap(prec_, o.prec_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    // 0 means "exact constant".
    long precision() const { return prec_; }
    long working_prec() const { return prec_ ? prec_ : kDefaultPrec; }
    static long combine(long a, long b) {
        if (a == 0) return b;
        if (b == 0) return a;
        return std::min(a, b);
    }

    friend BigFloat apply2(const BigFloat& a, const BigFloat& b,
                           int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        BigFloat r(0.0, combine(a.prec_, b.prec_));
        op(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return apply2(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return apply2(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return apply2(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return apply2(a, b, mpfr_div); }
    BigFloat operator-() const {
        BigFloat r = *this;
        mpfr_neg(r.f_, r.f_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) <= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) == 0; }

    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }
    BigFloat abs() const {
        BigFloat r = *this;
        mpfr_abs(r.f_, r.f_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r = *this;
        mpfr_sqrt(r.f_, r.f_, MPFR_RNDN);
        return r;
    }
    static BigFloat pow2(long e, long prec) {
        BigFloat r(0.0, prec);
        mpfr_set_ui_2exp(r.f_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(long prec) {
        BigFloat r(0.0, prec);
        mpfr_const_pi(r.f_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    Integer round_to_integer() const {
        Integer n;
        mpfr_get_z(n.raw(), f_, MPFR_RNDN);
        return n;
    }

    std::string to_string(int digits = 0) const {
        if (mpfr_zero_p(f_)) return "0";
        if (digits <= 0) digits = static_cast<int>(working_prec() * 0.30103) + 2;
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), f_, MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        bool neg = !m.empty() && m[0] == '-';
        std::string out = neg ? "-0." + m.substr(1) : "0." + m;
        return out + "e" + std::to_string(static_cast<long>(e));
    }

    mpfr_srcptr raw() const { return f_; }
    mpfr_ptr raw() { return f_; }

private:
    static long storage(long prec) { return prec > 2 ? prec : kExactStorage; }

    mpfr_t f_;
    long prec_;
};

inline BigFloat apply1(const BigFloat& x, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigFloat r(0.0, x.precision());
    op(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat sin(const BigFloat& x) { return apply1(x, mpfr_sin); }
inline BigFloat cos(const BigFloat& x) { return apply1(x, mpfr_cos); }
inline BigFloat exp(const BigFloat& x) { return apply1(x, mpfr_exp); }
inline BigFloat log(const BigFloat& x) { return apply1(x, mpfr_log); }
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) { return apply2(y, x, mpfr_atan2); }
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) { return apply2(x, y, mpfr_hypot); }

// Complex number with BigFloat components; precision semantics inherited
// from BigFloat.
class BigComplex {
public:
    BigComplex() = default;
    BigComplex(long v) : re_(v) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(double re, double im, long prec) : re_(re, prec), im_(im, prec) {}
    BigComplex(const Rational& re, long prec) : re_(re, prec), im_(0.0, prec) {}
    BigComplex(const Rational& re, const Rational& im, long prec) : re_(re, prec), im_(im, prec) {}
    static BigComplex zero(long prec) { return BigComplex(0.0, 0.0, prec); }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long precision() const { return BigFloat::combine(re_.precision(), im_.precision()); }
    long working_prec() const {
        long p = precision();
        return p ? p : BigFloat::kDefaultPrec;
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
        if (d.is_zero()) throw Error("DivisionByZero", "complex division by zero");
        return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigFloat abs() const { return hypot(re_, im_); }
    BigFloat arg() const { return atan2(im_, re_); }

    BigComplex sqrt() const { return nth_root_principal(2); }
    // Principal n-th root via polar form.
    BigComplex nth_root_principal(int n) const {
        long p = working_prec();
        if (is_zero()) return zero(p);
        BigFloat r = abs();
        BigFloat theta = arg();
        BigFloat rn = exp(log(r) / BigFloat(static_cast<double>(n), p));
        BigFloat tn = theta / BigFloat(static_cast<double>(n), p);
        return BigComplex(rn * cos(tn), rn * sin(tn));
    }

    std::string to_string(int digits = 0) const {
        return re_.to_string(digits) + "," + im_.to_string(digits);
    }

private:
    BigFloat re_, im_;
};

inline bool is_zero(const BigComplex& x) { return x.is_zero(); }

// exp(2*pi*i*tau), the modular nome map.
inline BigComplex exp_2pi_i(const BigComplex& tau) {
    long p = tau.working_prec();
    BigFloat two_pi = BigFloat(2.0, p) * BigFloat::pi(p);
    BigFloat mod = exp(-(two_pi * tau.im()));
    BigFloat ang = two_pi * tau.re();
    return BigComplex(mod * cos(ang), mod * sin(ang));
}

} // namespace k3
