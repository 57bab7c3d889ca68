#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Free-function zero test used by Poly; found by ADL for k3 types. Kept
// outside the class so the member is_zero() does not shadow it.
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}

// Dense univariate polynomial over a commutative ring T, coefficients
// stored lowest degree first with no trailing zeros. T needs +, -, *,
// ==, construction from long and a free is_zero(). Division-based
// operations (divmod, gcd, squarefree) additionally need operator/.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const T& constant) {
        c_.push_back(constant);
        trim();
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(T(1)); }
    // The monomial c * X^k.
    static Poly monomial(const T& c, int k) {
        std::vector<T> v(static_cast<size_t>(k) + 1, T(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const T& lead() const { return c_.back(); }
    // Coefficient of X^i (zero beyond the stored range).
    T at(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(int e) const {
        Poly r = one();
        Poly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1, T(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    template <class R>
    R evaluate(const R& x) const {
        R acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
        return acc;
    }
    T operator()(const T& x) const { return evaluate<T>(x); }

    // this(g) by Horner over Poly.
    Poly compose(const Poly& g) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    // Coefficient-wise image under f (useful for embedding Q[X] into
    // extension rings).
    template <class U, class F>
    Poly<U> map(F&& f) const {
        std::vector<U> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(f(x));
        return Poly<U>(std::move(r));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (coeff_is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(c_[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    template <class U = T>
    static std::string coeff_str(const U& x) {
        return x.to_string();
    }

    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero();
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    Poly<T> q, r = a;
    const T inv_lead = T(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        T c = r.lead() * inv_lead;
        int k = r.degree() - b.degree();
        Poly<T> t = Poly<T>::monomial(c, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).first;
}
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).second;
}

template <class T>
bool divides(const Poly<T>& d, const Poly<T>& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

template <class T>
Poly<T> make_monic(const Poly<T>& a) {
    if (a.is_zero()) return a;
    return a * (T(1) / a.lead());
}

// Monic Euclidean gcd. Exactness over speed; every degree in this
// project is small.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Largest k with d^k | a (a nonzero, d nonconstant).
template <class T>
int order_at_factor(const Poly<T>& a, const Poly<T>& d) {
    int k = 0;
    Poly<T> r = a;
    while (r.degree() >= d.degree()) {
        auto [q, rem] = divmod(r, d);
        if (!rem.is_zero()) break;
        r = q;
        ++k;
    }
    return k;
}

// Yun's square-free decomposition over a field of characteristic zero.
// Returns pairwise-coprime monic square-free factors with multiplicities
// plus the leading unit: f = unit * prod factor_i^mult_i.
template <class T>
std::pair<std::vector<std::pair<Poly<T>, int>>, T> squarefree_factorization(const Poly<T>& f) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "square-free decomposition of zero");
    std::vector<std::pair<Poly<T>, int>> out;
    T unit = f.lead();
    Poly<T> g = make_monic(f);
    if (g.degree() == 0) return {out, unit};

    Poly<T> gp = g.derivative();
    Poly<T> a = poly_gcd(g, gp);
    Poly<T> b = g / a;
    Poly<T> c = gp / a;
    Poly<T> d = c - b.derivative();
    int i = 1;
    while (!(b.degree() == 0)) {
        Poly<T> fac = poly_gcd(b, d);
        if (fac.degree() > 0) out.push_back({fac, i});
        b = b / fac;
        c = d / fac;
        d = c - b.derivative();
        ++i;
    }
    return {out, unit};
}

using PolyQ = Poly<Rational>;

std::ostream& operator<<(std::ostream& os, const PolyQ& p);

} // namespace k3
