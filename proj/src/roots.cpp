#include "k3/roots.hpp"

#include <algorithm>

namespace k3 {

RootStructure squarefree_decompose(const PolyQ& f) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "square-free decomposition of zero");
    auto [factors, unit] = squarefree_factorization(f);
    RootStructure rs;
    rs.factors = std::move(factors);
    rs.unit = unit;
    rs.field_note = FieldNote::Rational;
    return rs;
}

namespace {

// Attempt to recognize z as a rational via continued-fraction
// reconstruction of its real part; only exact verification below counts.
std::vector<Rational> rational_root_candidates(const BigComplex& z, long prec) {
    std::vector<Rational> out;
    BigFloat tol = BigFloat::pow2(-prec / 2, prec);
    if (!(z.im().abs() <= tol)) return out;
    BigFloat x = z.re();
    Integer num(0), den(1), pnum(1), pden(0);
    BigFloat cur = x;
    for (int it = 0; it < 64; ++it) {
        Integer a = cur.round_to_integer();
        Integer tn = a * num + pnum;
        Integer td = a * den + pden;
        pnum = num;
        pden = den;
        num = tn;
        den = td;
        if (!den.is_zero()) {
            out.emplace_back(num, den);
            if (out.size() > 8) break;
        }
        BigFloat frac = cur - BigFloat(Rational(a), prec);
        if (frac.abs() <= tol) break;
        cur = BigFloat(1.0, prec) / frac;
    }
    return out;
}

std::vector<BigComplex> to_complex_coeffs_roots(const PolyQ& f, long prec) {
    // Coefficients enter at working precision; rounding them to the
    // target precision first can merge close roots silently.
    Poly<BigComplex> fc =
        f.map<BigComplex>([&](const Rational& c) { return BigComplex(c, prec + 64); });
    return aberth_roots(fc, prec);
}

} // namespace

std::vector<BigComplex> aberth_roots(const Poly<BigComplex>& f, long precision_bits) {
    const int n = f.degree();
    std::vector<BigComplex> roots;
    if (n <= 0) return roots;
    const long wp = precision_bits + 64;

    Poly<BigComplex> g = f.map<BigComplex>([&](const BigComplex& c) {
        return BigComplex(BigFloat(0.0, wp) + c.re(), BigFloat(0.0, wp) + c.im());
    });
    Poly<BigComplex> gp = g.derivative();

    // Cauchy bound for initial guesses on a circle.
    BigFloat lead_abs = g.lead().abs();
    BigFloat radius(1.0, wp);
    for (int i = 0; i < n; ++i) {
        BigFloat m = BigFloat(1.0, wp) + g.at(i).abs() / lead_abs;
        if (radius < m) radius = m;
    }
    BigFloat two_pi = BigFloat(2.0, wp) * BigFloat::pi(wp);
    roots.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        BigFloat ang = two_pi * BigFloat((k + 0.25) / n, wp) + BigFloat(0.35, wp);
        roots.push_back(BigComplex(radius * cos(ang), radius * sin(ang)));
    }

    BigFloat eps = BigFloat::pow2(-(precision_bits + 16), wp);
    const int max_iter = 400;
    for (int it = 0; it < max_iter; ++it) {
        bool converged = true;
        for (int k = 0; k < n; ++k) {
            BigComplex fv = g.evaluate(roots[k]);
            BigComplex fpv = gp.evaluate(roots[k]);
            if (fpv.is_zero()) {
                // nudge off a critical point
                roots[k] = roots[k] + BigComplex(BigFloat(1e-3, wp), BigFloat(1e-3, wp));
                converged = false;
                continue;
            }
            BigComplex newton = fv / fpv;
            BigComplex sum = BigComplex::zero(wp);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                BigComplex d = roots[k] - roots[j];
                if (d.is_zero()) d = BigComplex(BigFloat(1e-20, wp), BigFloat(0.0, wp));
                sum += BigComplex(BigFloat(1.0, wp), BigFloat(0.0, wp)) / d;
            }
            BigComplex denom = BigComplex(BigFloat(1.0, wp), BigFloat(0.0, wp)) - newton * sum;
            if (denom.is_zero()) continue;
            BigComplex corr = newton / denom;
            roots[k] = roots[k] - corr;
            BigFloat scale = roots[k].abs();
            if (scale < BigFloat(1.0, wp)) scale = BigFloat(1.0, wp);
            if (!(corr.abs() <= eps * scale)) converged = false;
        }
        if (converged) break;
    }
    return roots;
}

std::vector<ComplexRoot> complex_roots(const PolyQ& f, long precision_bits) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "roots of the zero polynomial");
    if (precision_bits < 64) throw Error("PrecisionTooLow", "need at least 64 bits");

    RootStructure rs = squarefree_decompose(f);
    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : rs.factors) {
        PolyQ rem = factor;
        // Exact rational roots first, numerically guided but verified and
        // deflated exactly.
        bool progress = true;
        while (rem.degree() >= 1 && progress) {
            progress = false;
            auto approx = to_complex_coeffs_roots(rem, precision_bits);
            for (const auto& z : approx) {
                for (const auto& cand : rational_root_candidates(z, precision_bits)) {
                    if (rem(cand).is_zero()) {
                        out.push_back({BigComplex(cand, precision_bits), mult});
                        rem = rem / PolyQ{-cand, Rational(1)};
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
        }
        if (rem.degree() >= 1) {
            auto approx = to_complex_coeffs_roots(rem, precision_bits);
            // Roots of a square-free factor are distinct; a cluster
            // tighter than 2^(-prec/3) means the iteration could not
            // resolve them and the caller must retry with more bits.
            BigFloat sep = BigFloat::pow2(-precision_bits / 3, precision_bits);
            for (size_t i = 0; i < approx.size(); ++i)
                for (size_t j = i + 1; j < approx.size(); ++j) {
                    BigFloat scale = approx[i].abs();
                    if (scale < BigFloat(1)) scale = BigFloat(1);
                    if ((approx[i] - approx[j]).abs() < sep * scale)
                        throw Error("PrecisionExhausted",
                                    "cannot separate distinct roots at " +
                                        std::to_string(precision_bits) + " bits");
                }
            // Residual check |f(r)| < 2^(-prec/2) * coefficient scale.
            BigFloat res_bound = BigFloat::pow2(-precision_bits / 2, precision_bits);
            Poly<BigComplex> fc = rem.map<BigComplex>(
                [&](const Rational& c) { return BigComplex(c, precision_bits); });
            for (const auto& z : approx) {
                BigFloat scale(0.0, precision_bits);
                BigFloat zm = z.abs();
                if (zm < BigFloat(1)) zm = BigFloat(1.0, precision_bits);
                BigFloat p(1.0, precision_bits);
                for (int i = 0; i <= rem.degree(); ++i) {
                    scale += fc.at(i).abs() * p;
                    p = p * zm;
                }
                if (!(fc.evaluate(z).abs() < res_bound * scale))
                    throw Error("PrecisionExhausted", "root residual too large");
                out.push_back({z, mult});
            }
        }
    }
    // Stable presentation order: by real part, then imaginary part.
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.value.re() < b.value.re()) return true;
        if (b.value.re() < a.value.re()) return false;
        return a.value.im() < b.value.im();
    });
    return out;
}

std::vector<ComplexRoot> complex_roots_auto(const PolyQ& f, long start_bits) {
    long prec = std::max(start_bits, 64L);
    while (true) {
        try {
            return complex_roots(f, prec);
        } catch (const Error& e) {
            if (e.code() != "PrecisionExhausted" || prec >= 1024) throw;
            prec *= 2;
        }
    }
}

} // namespace k3
