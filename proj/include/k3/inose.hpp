#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/mpoly.hpp"
#include "k3/quadext.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

// The two-parameter quartic family X(a,b) and its attached data.
struct InoseParams {
    Rational a, b;
    friend bool operator==(const InoseParams& x, const InoseParams& y) {
        return x.a == y.a && x.b == y.b;
    }
};

struct InoseContext {
    InoseParams params;
    PolyQ p_poly; // P(X) = 4X^3 - 3aX - b

    explicit InoseContext(InoseParams prm)
        : params(prm), p_poly{-prm.b, prm.a * Rational(-3), Rational(0), Rational(4)} {}
    InoseContext(Rational a, Rational b) : InoseContext(InoseParams{std::move(a), std::move(b)}) {}
};

struct ModularInvariants {
    Rational pi, sigma;
};

// Unordered pair of J-invariants, exact in Q(sqrt(sigma^2 - 4 pi)).
struct JPair {
    QuadExt j1, j2;
};

ModularInvariants modular_invariants(const InoseContext& ctx);
JPair j_pair(const InoseContext& ctx);

// Unordered roots of x^2 - sigma x + pi in Q(sqrt(sigma^2 - 4 pi)).
JPair solve_j_quadratic(const Rational& sigma, const Rational& pi);

// Inversion of the invariant map. Rational solutions are listed
// explicitly; the radicand record describes the full solution set
// (a is any cube root of a_cubed, b either square root of b_squared).
struct FromJPair {
    Rational a_cubed;
    Rational b_squared;
    std::vector<InoseParams> rational; // all solutions with rational a and b
};

FromJPair from_j_pair(const QuadExt& j1, const QuadExt& j2);
FromJPair from_j_pair(const Rational& j1, const Rational& j2);

// Weierstrass data of the two fibrations attached to X(a,b).
WeierstrassFibration theta2_weierstrass(const InoseContext& ctx);
WeierstrassFibration psi2_weierstrass(const InoseContext& ctx);

// Arithmetic case split driving the singular-fiber tables.
enum class Theta2Case { Generic, TangentPlus, TangentMinus, AZeroBUnit, ACubeOneBZero };
std::string to_string(Theta2Case c);
Theta2Case theta2_fiber_case(const InoseContext& ctx);

// The Inose quartic in P^3 and its canonical involution.
MPoly4Q inose_quartic(const InoseContext& ctx);

struct ProjectiveMap {
    std::string name;
    std::array<MPoly4Q, 4> comps;
};

struct InvolutionCertificate {
    bool ok = false;
    MPoly4Q residual;       // quartic pullback minus monomial * quartic
    bool square_is_identity = false;
};

ProjectiveMap involution_beta(const InoseContext& ctx);
InvolutionCertificate verify_involution(const InoseContext& ctx, const ProjectiveMap& beta);

// Fiber of the [x,w] projection over lambda, as a cubic in (y,z,w);
// derived by exact substitution x = lambda*w into the quartic.
MPoly4Q fiber_cubic(const InoseContext& ctx, const Rational& lambda);

// Checks the u, v quotient substitution against the affine fiber cubic
// at sample points over quadratic extensions of Q.
bool quotient_substitution_check(const InoseContext& ctx, const Rational& lambda);

// Numeric mode mirrors of the headline operations (complex parameters,
// default relative tolerance 2^-64).
struct ModularInvariantsC {
    BigComplex pi, sigma;
};
struct JPairC {
    BigComplex j1, j2;
};
ModularInvariantsC modular_invariants_numeric(const BigComplex& a, const BigComplex& b);
JPairC j_pair_numeric(const BigComplex& a, const BigComplex& b);
std::vector<std::pair<BigComplex, BigComplex>> from_j_pair_numeric(const BigComplex& j1,
                                                                   const BigComplex& j2);

struct NumericFiber {
    BigComplex location;
    int delta_order;
    std::string type; // "In" with n = delta-order cluster size; these
                      // fibrations have multiplicative finite fibers
};
// Finite singular fibers of Theta2/Psi2 at complex parameters, found by
// clustering the numeric roots of P^2 - 1 at the given tolerance.
std::vector<NumericFiber> theta2_fibers_numeric(const BigComplex& a, const BigComplex& b,
                                                long precision_bits = 128);
std::vector<NumericFiber> psi2_fibers_numeric(const BigComplex& a, const BigComplex& b,
                                              long precision_bits = 128);

} // namespace k3
