#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3/mpoly.hpp"
#include "k3/quadext.hpp"
#include "k3/ratfunc.hpp"
#include "k3/roots.hpp"

namespace k3 {

// Legendre parameters (alpha, beta) of the two elliptic curves
// y^2 = x (x - 1)(x - lambda); both must avoid {0, 1}.
struct LegendrePair {
    Rational alpha, beta;
};

void check_legendre(const Rational& lambda);

// J of the Legendre curve: 4 (l^2 - l + 1)^3 / (27 l^2 (l - 1)^2),
// generic over the coefficient field.
template <class T>
T legendre_j_t(const T& lambda) {
    T one(1);
    T n = lambda * lambda - lambda + one;
    T d = lambda * lambda * (lambda - one) * (lambda - one);
    return T(4) * n * n * n / (T(27) * d);
}

Rational legendre_j(const Rational& lambda);

// The six-element lambda-orbit {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}
// with coincidences collapsed.
std::vector<Rational> legendre_orbit(const Rational& lambda);

// Kummer quartic z^2 x y = (x - w)(x - aw)(y - w)(y - bw).
MPoly4Q kummer_quartic(const LegendrePair& pair);

// Everything attached to the fibration on Km(E1 x E2) induced by
// [x,y,z,w] -> [R(x,y,w), xy].
struct KummerFibrationContext {
    LegendrePair pair;
    PolyQ d_poly;               // sextic D(mu) = d1 * d2
    PolyQ d1, d2;               // the two cubic halves
    std::vector<Rational> sigma; // the six locations, coincidences kept as repeats
};

KummerFibrationContext upsilon2_data(const LegendrePair& pair);

// Cross-ratio of the four branch points on the fiber conic over mu.
Rational upsilon2_cross_ratio(const LegendrePair& pair, const Rational& mu);

// Closed-form functional invariant in mu (reduced).
RatFuncQ upsilon2_functional_invariant(const LegendrePair& pair);
// The same function built as 4(r^2-r+1)^3 / (27 r^2 (r-1)^2) composed
// with the cross-ratio; the two must agree identically.
RatFuncQ upsilon2_cross_ratio_composition(const LegendrePair& pair);

// The quadric R(x, y, w) whose mu-pencil cuts out the fibration.
MPoly4Q upsilon2_conic_quadric(const LegendrePair& pair);

// The four branch points of the double cover over the conic at mu.
// Throws "SingularConic" when the conic degenerates at mu.
std::array<std::array<Rational, 3>, 4> upsilon2_branch_points(const LegendrePair& pair,
                                                              const Rational& mu);
bool upsilon2_conic_is_singular(const LegendrePair& pair, const Rational& mu);

enum class UpsilonCase { A, B, C, D };
std::string to_string(UpsilonCase c);

struct UpsilonFibers {
    UpsilonCase tag;
    // finite fiber orders: I_n entries, one per distinct root of D
    std::vector<int> finite_orders;
    bool multiplicities_consistent; // J-based tag vs D(mu) root structure
};

UpsilonFibers upsilon2_fiber_cases(const LegendrePair& pair);

// Case (d) requires J = 0, which forces lambda^2 - lambda + 1 = 0; that
// lives in Q(sqrt(-3)). The analysis of D(mu) there is run over the
// quadratic extension.
struct UpsilonCaseDWitness {
    QuadExt alpha;
    std::vector<std::pair<int, int>> d_multiplicities; // (factor degree, multiplicity)
    std::vector<int> finite_orders;
    int euler_total;
};
UpsilonCaseDWitness upsilon2_case_d_witness();

} // namespace k3
