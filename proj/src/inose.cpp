#include "k3/inose.hpp"

#include <algorithm>

namespace k3 {

ModularInvariants modular_invariants(const InoseContext& ctx) {
    const Rational& a = ctx.params.a;
    const Rational& b = ctx.params.b;
    Rational a3 = a.pow(3);
    return {a3, a3 - b.pow(2) + Rational(1)};
}

JPair solve_j_quadratic(const Rational& sigma, const Rational& pi) {
    Rational disc = sigma.pow(2) - Rational(4) * pi;
    QuadExt half_sigma(sigma / Rational(2));
    QuadExt root = QuadExt(Rational(0), Rational(1, 2), disc);
    return {half_sigma + root, half_sigma - root};
}

JPair j_pair(const InoseContext& ctx) {
    ModularInvariants mi = modular_invariants(ctx);
    return solve_j_quadratic(mi.sigma, mi.pi);
}

namespace {

FromJPair from_sigma_pi(const Rational& sigma, const Rational& pi) {
    FromJPair out;
    out.a_cubed = pi;
    out.b_squared = pi + Rational(1) - sigma;
    if (auto a = pi.exact_cbrt()) {
        if (auto b = out.b_squared.exact_sqrt()) {
            out.rational.push_back({*a, *b});
            if (!b->is_zero()) out.rational.push_back({*a, -*b});
        }
    }
    return out;
}

} // namespace

FromJPair from_j_pair(const QuadExt& j1, const QuadExt& j2) {
    QuadExt prod = j1 * j2;
    QuadExt sum = j1 + j2;
    if (!prod.is_rational() || !sum.is_rational())
        throw Error("IrrationalInvariants", "j-pair must have rational sum and product");
    return from_sigma_pi(sum.base(), prod.base());
}

FromJPair from_j_pair(const Rational& j1, const Rational& j2) {
    return from_sigma_pi(j1 + j2, j1 * j2);
}

WeierstrassFibration theta2_weierstrass(const InoseContext& ctx) {
    const PolyQ& P = ctx.p_poly;
    PolyQ P2 = P * P;
    WeierstrassFibration fib;
    fib.g2 = PolyQ::one() - P2 * Rational(4, 3);
    fib.g3 = P2 * P * Rational(16, 27) - P * Rational(2, 3);
    return fib;
}

WeierstrassFibration psi2_weierstrass(const InoseContext& ctx) {
    const PolyQ& P = ctx.p_poly;
    PolyQ P2 = P * P;
    WeierstrassFibration fib;
    fib.g2 = -(P2 * Rational(1, 3) + PolyQ::one());
    fib.g3 = P2 * P * Rational(2, 27) - P * Rational(2, 3);
    return fib;
}

std::string to_string(Theta2Case c) {
    switch (c) {
        case Theta2Case::Generic: return "generic";
        case Theta2Case::TangentPlus: return "tangent_plus";
        case Theta2Case::TangentMinus: return "tangent_minus";
        case Theta2Case::AZeroBUnit: return "a0_bpm1";
        case Theta2Case::ACubeOneBZero: return "a3_1_b0";
    }
    return "?";
}

Theta2Case theta2_fiber_case(const InoseContext& ctx) {
    const Rational& a = ctx.params.a;
    const Rational& b = ctx.params.b;
    Rational a3 = a.pow(3);
    Rational one(1);
    if (a.is_zero() && (b == one || b == -one)) return Theta2Case::AZeroBUnit;
    if (a3 == one && b.is_zero()) return Theta2Case::ACubeOneBZero;
    if (!a.is_zero() && !b.is_zero()) {
        if (a3 == (b + one).pow(2)) return Theta2Case::TangentPlus;
        if (a3 == (b - one).pow(2)) return Theta2Case::TangentMinus;
    }
    return Theta2Case::Generic;
}

MPoly4Q inose_quartic(const InoseContext& ctx) {
    const Rational& a = ctx.params.a;
    const Rational& b = ctx.params.b;
    MPoly4Q q;
    q += MPoly4Q::term(Rational(1), 0, 2, 1, 1);       // y^2 z w
    q += MPoly4Q::term(Rational(-4), 3, 0, 1, 0);      // -4 x^3 z
    q += MPoly4Q::term(Rational(3) * a, 1, 0, 1, 2);   // 3a x z w^2
    q += MPoly4Q::term(Rational(-1, 2), 0, 0, 2, 2);   // -1/2 z^2 w^2
    q += MPoly4Q::term(Rational(-1, 2), 0, 0, 0, 4);   // -1/2 w^4
    q += MPoly4Q::term(b, 0, 0, 1, 3);                 // b z w^3
    return q;
}

ProjectiveMap involution_beta(const InoseContext&) {
    ProjectiveMap m;
    m.name = "beta1";
    MPoly4Q x = MPoly4Q::var(0), y = MPoly4Q::var(1), z = MPoly4Q::var(2), w = MPoly4Q::var(3);
    m.comps = {x * z, -(y * z), w * w, z * w};
    return m;
}

InvolutionCertificate verify_involution(const InoseContext& ctx, const ProjectiveMap& beta) {
    InvolutionCertificate cert;
    MPoly4Q Q = inose_quartic(ctx);

    // (i) beta composed with itself is the identity up to a common
    // monomial factor on each component.
    std::array<MPoly4Q, 4> twice;
    for (int i = 0; i < 4; ++i) twice[static_cast<size_t>(i)] = beta.comps[static_cast<size_t>(i)].substitute(beta.comps);
    cert.square_is_identity = true;
    std::optional<MPoly4Q> common;
    for (int i = 0; i < 4; ++i) {
        MPoly4Q vi = MPoly4Q::var(i);
        // twice[i] must be divisible by var i with quotient shared by all
        auto content = twice[static_cast<size_t>(i)].monomial_content();
        if (content[static_cast<size_t>(i)] < 1) {
            cert.square_is_identity = false;
            break;
        }
        MPoly4<Rational>::Exp e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        MPoly4Q quot = twice[static_cast<size_t>(i)].divide_by_monomial(e);
        if (!common) {
            common = quot;
        } else if (!(*common == quot)) {
            cert.square_is_identity = false;
            break;
        }
    }

    // (ii) the quartic pulls back to a monomial multiple of itself.
    MPoly4Q pulled = Q.substitute(beta.comps);
    auto mono = pulled.monomial_content();
    MPoly4Q reduced = pulled.divide_by_monomial(mono);
    cert.residual = reduced - Q;
    cert.ok = cert.square_is_identity && cert.residual.is_zero();
    if (!cert.ok)
        throw Error("InvolutionCheckFailed", "residual: " + cert.residual.to_string());
    return cert;
}

MPoly4Q fiber_cubic(const InoseContext& ctx, const Rational& lambda) {
    MPoly4Q Q = inose_quartic(ctx);
    MPoly4Q x = MPoly4Q::var(0), y = MPoly4Q::var(1), z = MPoly4Q::var(2), w = MPoly4Q::var(3);
    std::array<MPoly4Q, 4> sub = {w * lambda, y, z, w};
    MPoly4Q fib = Q.substitute(sub);
    // every term carries w; normalize to the display scaling (factor 2)
    MPoly4Q cubic = fib.divide_by_monomial({0, 0, 0, 1}) * Rational(2);
    return cubic;
}

bool quotient_substitution_check(const InoseContext& ctx, const Rational& lambda) {
    Rational P = ctx.p_poly(lambda);
    if (P.pow(2) == Rational(1))
        throw Error("SingularFiber", "P(lambda)^2 = 1 violates the precondition");
    // Affine fiber cubic (w = 1, coordinates y, z): 2 y^2 z = z^2 + 2 P z + 1.
    // Sample points: pick z, solve for y in a quadratic extension, push
    // through u = y^2 - P, v = (1/2) y (z - 1/z) and test the target curve.
    static const long zs[] = {1, 2, 3, -1, 5, -2, 7, -3};
    int checked = 0;
    for (long zi : zs) {
        Rational z(zi);
        Rational y2 = (z * z + Rational(2) * P * z + Rational(1)) / (Rational(2) * z);
        QuadExt y = QuadExt::sqrt_of(y2);
        QuadExt u = y * y - QuadExt(P);
        QuadExt v = y * QuadExt((z - z.inverse()) / Rational(2));
        QuadExt lhs = v * v;
        QuadExt rhs = (u + QuadExt(P)) * (u - QuadExt(Rational(1))) * (u + QuadExt(Rational(1)));
        if (!(lhs == rhs)) return false;
        ++checked;
    }
    return checked > 0;
}

ModularInvariantsC modular_invariants_numeric(const BigComplex& a, const BigComplex& b) {
    BigComplex a3 = a * a * a;
    BigComplex one(1);
    return {a3, a3 - b * b + one};
}

JPairC j_pair_numeric(const BigComplex& a, const BigComplex& b) {
    ModularInvariantsC mi = modular_invariants_numeric(a, b);
    BigComplex four(4), two(2);
    BigComplex disc = mi.sigma * mi.sigma - four * mi.pi;
    BigComplex root = disc.sqrt();
    return {(mi.sigma + root) / two, (mi.sigma - root) / two};
}

std::vector<std::pair<BigComplex, BigComplex>> from_j_pair_numeric(const BigComplex& j1,
                                                                   const BigComplex& j2) {
    BigComplex pi = j1 * j2;
    BigComplex sigma = j1 + j2;
    BigComplex one(1);
    std::vector<std::pair<BigComplex, BigComplex>> out;
    long p = pi.working_prec();
    BigComplex a0 = pi.nth_root_principal(3);
    // the three cube roots
    BigFloat half(0.5, p);
    BigFloat s3 = BigFloat(3.0, p).sqrt() * half;
    BigComplex omega(-half, s3);
    for (int k = 0; k < 3; ++k) {
        BigComplex a = a0;
        for (int i = 0; i < k; ++i) a = a * omega;
        BigComplex b2 = a * a * a + one - sigma;
        BigComplex b = b2.sqrt();
        out.push_back({a, b});
        if (!b.is_zero()) out.push_back({a, -b});
    }
    return out;
}

namespace {

std::vector<NumericFiber> cluster_fibers(const BigComplex& a, const BigComplex& b,
                                         long precision_bits, int delta_scale) {
    long wp = precision_bits + 64;
    // P^2 - 1 as a complex-coefficient polynomial
    BigComplex c0 = -b, c1 = BigComplex(-3) * a, c3(4);
    Poly<BigComplex> P{c0 + BigComplex(0), c1, BigComplex(0), c3};
    Poly<BigComplex> probe = P * P - Poly<BigComplex>{BigComplex(Rational(1), wp)};
    auto roots = aberth_roots(probe, precision_bits);
    BigFloat tol = BigFloat::pow2(-precision_bits / 3, wp);
    std::vector<NumericFiber> out;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if ((roots[i] - roots[j]).abs() < tol) {
                used[j] = true;
                ++count;
            }
        }
        NumericFiber f;
        f.location = roots[i];
        f.delta_order = count * delta_scale;
        f.type = "I" + std::to_string(f.delta_order);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

std::vector<NumericFiber> theta2_fibers_numeric(const BigComplex& a, const BigComplex& b,
                                                long precision_bits) {
    return cluster_fibers(a, b, precision_bits, 1);
}

std::vector<NumericFiber> psi2_fibers_numeric(const BigComplex& a, const BigComplex& b,
                                              long precision_bits) {
    return cluster_fibers(a, b, precision_bits, 2);
}

} // namespace k3
