#pragma once

#include <array>
#include <map>
#include <string>

#include "k3/poly.hpp"

namespace k3 {

// Sparse polynomial in four variables (x, y, z, w) over a commutative
// ring T. Small-scale by design: quartic surfaces, gradients, involution
// certificates.
template <class T>
class MPoly4 {
public:
    using Exp = std::array<int, 4>;

    MPoly4() = default;
    explicit MPoly4(const T& c) { add_term(c, {0, 0, 0, 0}); }

    static MPoly4 var(int i) {
        MPoly4 p;
        Exp e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        p.add_term(T(1), e);
        return p;
    }
    static MPoly4 term(const T& c, int ex, int ey, int ez, int ew) {
        MPoly4 p;
        p.add_term(c, {ex, ey, ez, ew});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, T>& terms() const { return terms_; }

    void add_term(const T& c, const Exp& e) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MPoly4 operator+(const MPoly4& a, const MPoly4& b) {
        MPoly4 r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(c, e);
        return r;
    }
    friend MPoly4 operator-(const MPoly4& a, const MPoly4& b) {
        MPoly4 r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(-c, e);
        return r;
    }
    MPoly4 operator-() const {
        MPoly4 r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MPoly4 operator*(const MPoly4& a, const MPoly4& b) {
        MPoly4 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]});
        return r;
    }
    friend MPoly4 operator*(const MPoly4& a, const T& s) {
        MPoly4 r;
        for (const auto& [e, c] : a.terms_) r.add_term(c * s, e);
        return r;
    }
    MPoly4& operator+=(const MPoly4& o) { return *this = *this + o; }
    MPoly4& operator-=(const MPoly4& o) { return *this = *this - o; }

    friend bool operator==(const MPoly4& a, const MPoly4& b) { return a.terms_ == b.terms_; }

    MPoly4 pow(int e) const {
        MPoly4 r(T(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    MPoly4 partial(int i) const {
        MPoly4 r;
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            Exp f = e;
            f[static_cast<size_t>(i)] = k - 1;
            r.add_term(c * T(static_cast<long>(k)), f);
        }
        return r;
    }

    T evaluate(const std::array<T, 4>& p) const {
        T acc(0);
        for (const auto& [e, c] : terms_) {
            T t = c;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) t = t * p[static_cast<size_t>(i)];
            acc = acc + t;
        }
        return acc;
    }

    // Substitute each variable by a polynomial map component.
    MPoly4 substitute(const std::array<MPoly4, 4>& image) const {
        MPoly4 acc;
        for (const auto& [e, c] : terms_) {
            MPoly4 t(c);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) t = t * image[static_cast<size_t>(i)];
            acc += t;
        }
        return acc;
    }

    bool is_homogeneous(int* deg_out = nullptr) const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = e[0] + e[1] + e[2] + e[3];
            if (deg < 0) deg = d;
            if (d != deg) return false;
        }
        if (deg_out) *deg_out = deg;
        return true;
    }

    // Quotient by a monomial divisor; requires exact divisibility.
    MPoly4 divide_by_monomial(const Exp& m) const {
        MPoly4 r;
        for (const auto& [e, c] : terms_) {
            Exp f;
            for (int i = 0; i < 4; ++i) {
                if (e[static_cast<size_t>(i)] < m[static_cast<size_t>(i)])
                    throw Error("NotDivisible", "monomial does not divide every term");
                f[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] - m[static_cast<size_t>(i)];
            }
            r.terms_.emplace(f, c);
        }
        return r;
    }

    // Smallest exponent of each variable across all terms — the largest
    // monomial dividing the polynomial.
    Exp monomial_content() const {
        Exp m{0, 0, 0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (int i = 0; i < 4; ++i)
                    m[static_cast<size_t>(i)] = std::min(m[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
            }
        }
        return m;
    }

    std::string to_string(const std::array<std::string, 4>& names = {"x", "y", "z", "w"}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.to_string() + ")";
            for (int i = 0; i < 4; ++i) {
                int k = it->first[static_cast<size_t>(i)];
                if (k >= 1) s += "*" + names[static_cast<size_t>(i)];
                if (k >= 2) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    std::map<Exp, T> terms_;
};

using MPoly4Q = MPoly4<Rational>;

template <class T>
bool is_zero(const MPoly4<T>& p) {
    return p.is_zero();
}

} // namespace k3
