#pragma once

#include <string>
#include <vector>

#include "k3/poly.hpp"
#include "k3/ratfunc.hpp"
#include "k3/roots.hpp"

namespace k3 {

// Kodaira type of a singular fiber of an elliptic fibration.
struct KodairaType {
    enum class Kind { In, Instar, II, III, IV, IVstar, IIIstar, IIstar };
    Kind kind;
    int n = 0; // only for In / In*

    int euler() const {
        switch (kind) {
            case Kind::In: return n;
            case Kind::Instar: return n + 6;
            case Kind::II: return 2;
            case Kind::III: return 3;
            case Kind::IV: return 4;
            case Kind::IVstar: return 8;
            case Kind::IIIstar: return 9;
            case Kind::IIstar: return 10;
        }
        return 0;
    }
    std::string name() const {
        switch (kind) {
            case Kind::In: return "I" + std::to_string(n);
            case Kind::Instar: return "I*" + std::to_string(n);
            case Kind::II: return "II";
            case Kind::III: return "III";
            case Kind::IV: return "IV";
            case Kind::IVstar: return "IV*";
            case Kind::IIIstar: return "III*";
            case Kind::IIstar: return "II*";
        }
        return "?";
    }
    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.kind == b.kind && (a.kind != Kind::In && a.kind != Kind::Instar ? true : a.n == b.n);
    }
    static KodairaType In(int n) { return {Kind::In, n}; }
    static KodairaType Instar(int n) { return {Kind::Instar, n}; }
};

// Elliptic fibration over P^1 in short Weierstrass form
// y^2 = x^3 + g2(lambda) x + g3(lambda), with section weights 8 and 12
// governing the fiber at infinity (K3 normalization).
struct WeierstrassFibration {
    PolyQ g2, g3;
    int weight_g2 = 8;
    int weight_g3 = 12;
};

// 4 g2^3 + 27 g3^2, expanded exactly. Throws "NotAnEllipticFibration"
// when identically zero.
PolyQ discriminant(const WeierstrassFibration& fib);

// Reduced 4 g2^3 / Delta, normalized so J = 1 where g3 = 0 (g2 != 0)
// and J = 0 where g2 = 0 (g3 != 0).
RatFuncQ functional_invariant(const WeierstrassFibration& fib);

// Kodaira type from the valuation triple (ord g2, ord g3, ord Delta) at
// a point of the base, char-0 Tate table for short Weierstrass models.
// Throws "NonMinimalModel" outside the table.
KodairaType classify_from_orders(int ord_g2, int ord_g3, int ord_delta);

// Classification at a root of the given irreducible-over-the-analysis
// factor of Delta (all Galois-conjugate roots share the type).
KodairaType classify_finite_fiber(const WeierstrassFibration& fib, const PolyQ& factor);
KodairaType classify_finite_fiber(const WeierstrassFibration& fib, const Rational& location);

// Fiber at lambda = infinity via weight-deficiency valuations
// ord_inf(g2) = weight_g2 - deg g2 etc.; quadruple-shift minimalization
// is applied there. Throws "NotSingularAtInfinity" when the fiber at
// infinity is smooth.
KodairaType classify_infinity_fiber(const WeierstrassFibration& fib);

struct FiberRecord {
    bool at_infinity = false;
    PolyQ factor;                   // exact minimal factor of the location (finite case)
    std::vector<BigComplex> approx; // numeric root approximations
    KodairaType kodaira;
    int delta_order = 0;
};

// Every singular fiber: the roots of Delta grouped by exact factor with
// uniform valuation data, plus infinity when singular there.
std::vector<FiberRecord> full_fiber_table(const WeierstrassFibration& fib);

int euler_sum(const std::vector<FiberRecord>& table);

} // namespace k3
