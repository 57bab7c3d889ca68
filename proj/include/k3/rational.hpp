#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "k3/error.hpp"

namespace k3 {

// Arbitrary-precision integer, a thin RAII wrapper over GMP's mpz_t.
class Integer {
public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    explicit Integer(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw Error("ParseError", "not an integer: '" + s + "'");
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Truncated quotient/remainder.
    friend Integer operator/(const Integer& a, const Integer& b) {
        Integer r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        Integer r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    // Exact division; b must divide a.
    Integer divexact(const Integer& b) const {
        Integer r;
        mpz_divexact(r.z_, z_, b.z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const Integer& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }
    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }
    Integer pow(unsigned long e) const {
        Integer r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }
    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    bool divisible_by(const Integer& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    bool is_perfect_square() const { return mpz_perfect_square_p(z_) != 0; }
    Integer isqrt() const {
        Integer r;
        mpz_sqrt(r.z_, z_);
        return r;
    }
    // Exact n-th root if it exists (handles negative values for odd n).
    std::optional<Integer> exact_root(unsigned long n) const {
        Integer r;
        int exact = mpz_root(r.z_, z_, n);
        if (exact) return r;
        return std::nullopt;
    }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }
    double to_double() const { return mpz_get_d(z_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

// Exact rational number. Always stored canonically: reduced, positive
// denominator. Equality is structural.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpq_init(q_);
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw Error("ZeroDenominator", "rational with zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const Integer& num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Parses "p/q" or "p"; q > 0 is not required on input but the stored
    // form is always canonical.
    static Rational parse(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw Error("ParseError", "not a rational: '" + s + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw Error("ZeroDenominator", "rational with zero denominator: '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "rational division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const Rational& a, long b) { return mpq_cmp_si(a.q_, b, 1) == 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inverse() const {
        if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
        return r;
    }

    Integer num() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Integer den() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    // True iff this is the square of a rational; when so, returns that
    // (nonnegative) square root.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        if (!num().is_perfect_square() || !den().is_perfect_square()) return std::nullopt;
        return Rational(num().isqrt(), den().isqrt());
    }
    std::optional<Rational> exact_cbrt() const {
        auto n = num().exact_root(3);
        if (!n) return std::nullopt;
        auto d = den().exact_root(3);
        if (!d) return std::nullopt;
        return Rational(*n, *d);
    }

    double to_double() const { return mpq_get_d(q_); }

    // Wire format: "p/q" with q > 0, reduced; integers print without "/1".
    std::string to_string() const {
        std::string s = num().to_string();
        if (!is_integer()) s += "/" + den().to_string();
        return s;
    }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Integer& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Integer& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

} // namespace k3
