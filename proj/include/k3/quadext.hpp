#pragma once

#include <string>

#include "k3/error.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Element base + coeff*sqrt(radicand) of a quadratic extension of Q.
// The radicand is canonicalized to a squarefree-reduced integer (square
// factors found by bounded trial division are pulled into coeff; a
// perfect-square radicand collapses the element to its rational part).
// Elements with coeff == 0 are context-free and combine with any
// radicand; mixing two distinct irrational radicands is an error.
class QuadExt {
public:
    QuadExt() : base_(0), coeff_(0), rad_(0) {}
    QuadExt(long v) : base_(v), coeff_(0), rad_(0) {}
    QuadExt(Rational base) : base_(std::move(base)), coeff_(0), rad_(0) {}
    QuadExt(Rational base, Rational coeff, Rational radicand)
        : base_(std::move(base)), coeff_(std::move(coeff)) {
        canonicalize(std::move(radicand));
    }

    static QuadExt sqrt_of(const Rational& radicand) { return QuadExt(Rational(0), Rational(1), radicand); }

    const Rational& base() const { return base_; }
    const Rational& coeff() const { return coeff_; }
    const Integer& radicand() const { return rad_; }

    bool is_rational() const { return coeff_.is_zero(); }
    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }

    QuadExt conj() const {
        QuadExt r = *this;
        r.coeff_ = -r.coeff_;
        return r;
    }
    // Field norm base^2 - coeff^2 * radicand.
    Rational norm() const { return base_ * base_ - coeff_ * coeff_ * Rational(rad_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Integer rad = unify(a, b);
        return make_raw(a.base_ + b.base_, a.coeff_ + b.coeff_, rad);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        Integer rad = unify(a, b);
        return make_raw(a.base_ - b.base_, a.coeff_ - b.coeff_, rad);
    }
    QuadExt operator-() const { return make_raw(-base_, -coeff_, rad_); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Integer rad = unify(a, b);
        Rational d(rad);
        return make_raw(a.base_ * b.base_ + a.coeff_ * b.coeff_ * d,
                        a.base_ * b.coeff_ + a.coeff_ * b.base_, rad);
    }
    QuadExt inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw Error("DivisionByZero", "inverse of zero norm element");
        QuadExt c = conj();
        return make_raw(c.base_ / n, c.coeff_ / n, rad_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (!(a.base_ == b.base_ && a.coeff_ == b.coeff_)) return false;
        if (a.coeff_.is_zero()) return true;
        return a.rad_ == b.rad_;
    }

    std::string to_string() const {
        if (is_rational()) return base_.to_string();
        std::string s = base_.is_zero() ? "" : base_.to_string() + " + ";
        return s + coeff_.to_string() + "*sqrt(" + rad_.to_string() + ")";
    }

private:
    static QuadExt make_raw(Rational base, Rational coeff, Integer rad) {
        QuadExt r;
        r.base_ = std::move(base);
        r.coeff_ = std::move(coeff);
        r.rad_ = coeff_zero(r.coeff_) ? Integer(0) : std::move(rad);
        return r;
    }
    static bool coeff_zero(const Rational& c) { return c.is_zero(); }

    static Integer unify(const QuadExt& a, const QuadExt& b) {
        if (a.coeff_.is_zero()) return b.rad_;
        if (b.coeff_.is_zero()) return a.rad_;
        if (!(a.rad_ == b.rad_))
            throw Error("RadicandMismatch", "sqrt(" + a.rad_.to_string() + ") vs sqrt(" + b.rad_.to_string() + ")");
        return a.rad_;
    }

    void canonicalize(Rational radicand) {
        if (coeff_.is_zero() || radicand.is_zero()) {
            coeff_ = Rational(0);
            rad_ = Integer(0);
            return;
        }
        // sqrt(p/q) = sqrt(p*q)/q.
        Integer p = radicand.num();
        Integer q = radicand.den();
        coeff_ /= Rational(q);
        Integer r = p * q;
        // Pull out square factors found by trial division, then check
        // whether the remaining cofactor is itself a perfect square.
        Integer s(1);
        for (long f = 2; f * f <= 1000000L; f = (f == 2 ? 3 : f + 2)) {
            Integer f2(f * f);
            while (r.divisible_by(f2)) {
                r = r.divexact(f2);
                s *= Integer(f);
            }
            if (r.abs() < f2) break;
        }
        Integer ra = r.abs();
        if (ra.is_perfect_square()) {
            s *= ra.isqrt();
            r = (r.sign() < 0) ? Integer(-1) : Integer(1);
        }
        coeff_ *= Rational(s);
        if (r == 1) {
            base_ += coeff_;
            coeff_ = Rational(0);
            rad_ = Integer(0);
        } else {
            rad_ = r;
        }
    }

    Rational base_, coeff_;
    Integer rad_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

} // namespace k3
