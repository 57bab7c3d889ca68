#pragma once

#include <array>
#include <string>

#include "k3/error.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Element c0 + c1*q + c2*q^2 of Q[q]/(q^3 - modulus). Multiplication
// reduces q^3 -> modulus. Pure rational elements (c1 == c2 == 0) are
// context-free and combine with any modulus. When the modulus is not a
// rational cube the ring is a field and inverse() is total on nonzero
// elements.
class CubicExt {
public:
    CubicExt() : c_{Rational(0), Rational(0), Rational(0)}, mod_(0) {}
    CubicExt(long v) : c_{Rational(v), Rational(0), Rational(0)}, mod_(0) {}
    CubicExt(Rational v) : c_{std::move(v), Rational(0), Rational(0)}, mod_(0) {}
    CubicExt(Rational c0, Rational c1, Rational c2, Rational modulus)
        : c_{std::move(c0), std::move(c1), std::move(c2)}, mod_(std::move(modulus)) {
        if (is_rational()) mod_ = Rational(0);
    }

    // The generator q itself.
    static CubicExt generator(const Rational& modulus) {
        return CubicExt(Rational(0), Rational(1), Rational(0), modulus);
    }

    const Rational& c0() const { return c_[0]; }
    const Rational& c1() const { return c_[1]; }
    const Rational& c2() const { return c_[2]; }
    const Rational& modulus() const { return mod_; }

    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }
    bool is_zero() const { return c_[0].is_zero() && is_rational(); }

    friend CubicExt operator+(const CubicExt& a, const CubicExt& b) {
        Rational m = unify(a, b);
        return make(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], m);
    }
    friend CubicExt operator-(const CubicExt& a, const CubicExt& b) {
        Rational m = unify(a, b);
        return make(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], m);
    }
    CubicExt operator-() const { return make(-c_[0], -c_[1], -c_[2], mod_); }
    friend CubicExt operator*(const CubicExt& a, const CubicExt& b) {
        Rational m = unify(a, b);
        // (a0 + a1 q + a2 q^2)(b0 + b1 q + b2 q^2) with q^3 = m, q^4 = m q.
        Rational d0 = a.c_[0] * b.c_[0] + m * (a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1]);
        Rational d1 = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0] + m * a.c_[2] * b.c_[2];
        Rational d2 = a.c_[0] * b.c_[2] + a.c_[1] * b.c_[1] + a.c_[2] * b.c_[0];
        return make(std::move(d0), std::move(d1), std::move(d2), m);
    }
    CubicExt& operator+=(const CubicExt& o) { return *this = *this + o; }
    CubicExt& operator-=(const CubicExt& o) { return *this = *this - o; }
    CubicExt& operator*=(const CubicExt& o) { return *this = *this * o; }

    // Solve (this * x) = 1 as a 3x3 rational linear system via Cramer.
    CubicExt inverse() const {
        if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
        if (is_rational()) return CubicExt(c_[0].inverse());
        const Rational& m = mod_;
        // Columns of the multiplication-by-this matrix in basis 1, q, q^2.
        Rational a0 = c_[0], a1 = c_[1], a2 = c_[2];
        Rational M[3][3] = {{a0, m * a2, m * a1},
                            {a1, a0, m * a2},
                            {a2, a1, a0}};
        Rational det = det3(M);
        if (det.is_zero()) throw Error("DivisionByZero", "non-invertible element (modulus is a cube)");
        Rational inv[3];
        for (int k = 0; k < 3; ++k) {
            Rational Mk[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) Mk[i][j] = M[i][j];
            for (int i = 0; i < 3; ++i) Mk[i][k] = Rational(i == 0 ? 1 : 0);
            inv[k] = det3(Mk) / det;
        }
        return make(inv[0], inv[1], inv[2], mod_);
    }
    friend CubicExt operator/(const CubicExt& a, const CubicExt& b) { return a * b.inverse(); }

    friend bool operator==(const CubicExt& a, const CubicExt& b) {
        if (!(a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2])) return false;
        if (a.is_rational()) return true;
        return a.mod_ == b.mod_;
    }

    std::string to_string() const {
        std::string s = c_[0].to_string();
        if (!c_[1].is_zero()) s += " + (" + c_[1].to_string() + ")*q";
        if (!c_[2].is_zero()) s += " + (" + c_[2].to_string() + ")*q^2";
        return s;
    }

private:
    static CubicExt make(Rational d0, Rational d1, Rational d2, Rational m) {
        CubicExt r;
        r.c_ = {std::move(d0), std::move(d1), std::move(d2)};
        r.mod_ = r.is_rational() ? Rational(0) : std::move(m);
        return r;
    }
    static Rational unify(const CubicExt& a, const CubicExt& b) {
        if (a.is_rational()) return b.mod_;
        if (b.is_rational()) return a.mod_;
        if (!(a.mod_ == b.mod_))
            throw Error("ModulusMismatch",
                        "q^3=" + a.mod_.to_string() + " vs q^3=" + b.mod_.to_string());
        return a.mod_;
    }
    static Rational det3(const Rational (&M)[3][3]) {
        return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    }

    std::array<Rational, 3> c_;
    Rational mod_;
};

inline bool is_zero(const CubicExt& x) { return x.is_zero(); }

} // namespace k3
