#pragma once

#include <string>

#include "k3/poly.hpp"

namespace k3 {

// Reduced rational function num/den over a field T: gcd(num, den) = 1
// and den monic. Equality is structural on the normal form.
template <class T>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<T>::one()) {}
    RatFunc(Poly<T> num, Poly<T> den) {
        if (den.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
        Poly<T> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        T lead_inv = T(1) / den.lead();
        num_ = num * lead_inv;
        den_ = den * lead_inv;
    }
    explicit RatFunc(Poly<T> num) : num_(std::move(num)), den_(Poly<T>::one()) {}
    explicit RatFunc(const T& c) : num_(Poly<T>(c)), den_(Poly<T>::one()) {}

    const Poly<T>& num() const { return num_; }
    const Poly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc pow(int e) const {
        if (e < 0) return (RatFunc(Poly<T>::one()) / *this).pow(-e);
        return RatFunc(num_.pow(e), den_.pow(e));
    }

    // Substitute another rational function for the variable.
    RatFunc compose(const RatFunc& g) const {
        int m = std::max(num_.degree(), den_.degree());
        Poly<T> n, d;
        Poly<T> gp = Poly<T>::one();
        // powers g^i h^(m-i) built incrementally
        std::vector<Poly<T>> gn(static_cast<size_t>(m) + 1), hd(static_cast<size_t>(m) + 1);
        gn[0] = Poly<T>::one();
        hd[0] = Poly<T>::one();
        for (int i = 1; i <= m; ++i) {
            gn[static_cast<size_t>(i)] = gn[static_cast<size_t>(i - 1)] * g.num_;
            hd[static_cast<size_t>(i)] = hd[static_cast<size_t>(i - 1)] * g.den_;
        }
        for (int i = 0; i <= m; ++i) {
            Poly<T> term = gn[static_cast<size_t>(i)] * hd[static_cast<size_t>(m - i)];
            if (i <= num_.degree()) n += term * num_.at(i);
            if (i <= den_.degree()) d += term * den_.at(i);
        }
        return RatFunc(n, d);
    }

    // Evaluation; throws on a pole.
    T operator()(const T& x) const {
        T d = den_(x);
        if (is_zero(d)) throw Error("Pole", "evaluation at a pole");
        return num_(x) / d;
    }
    bool is_pole(const T& x) const { return is_zero(den_(x)) && !is_zero(num_(x)); }

    // Order of vanishing of den at x minus that of num (positive at a
    // pole of the function).
    int pole_order(const T& x) const {
        Poly<T> lin{-x, T(1)};
        return order_at_factor(den_, lin) - order_at_factor(num_, lin);
    }

    std::string to_string(const std::string& var = "x") const {
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    Poly<T> num_, den_;
};

// Cross-multiplied identity test. Normal forms are unique here, so this
// coincides with structural equality; kept as the spec-level oracle.
template <class T>
bool rational_function_equal(const RatFunc<T>& f, const RatFunc<T>& g) {
    return f.num() * g.den() == g.num() * f.den();
}

using RatFuncQ = RatFunc<Rational>;

} // namespace k3
