#include "k3/weierstrass.hpp"

#include <algorithm>

namespace k3 {

PolyQ discriminant(const WeierstrassFibration& fib) {
    PolyQ d = fib.g2.pow(3) * Rational(4) + fib.g3.pow(2) * Rational(27);
    if (d.is_zero()) throw Error("NotAnEllipticFibration", "discriminant vanishes identically");
    return d;
}

RatFuncQ functional_invariant(const WeierstrassFibration& fib) {
    PolyQ d = discriminant(fib);
    return RatFuncQ(fib.g2.pow(3) * Rational(4), d);
}

KodairaType classify_from_orders(int a, int b, int d) {
    auto bad = [&]() {
        return Error("NonMinimalModel", "valuation triple (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(d) +
                                            ") is outside the Tate table");
    };
    if (d <= 0) throw Error("SmoothFiber", "no singular fiber at this location");
    if (a >= 4 && b >= 6 && d >= 12) throw bad();
    if (a == 0 && b == 0) return KodairaType::In(d);
    // additive reduction
    if (b == 1 && a >= 1 && d == 2) return {KodairaType::Kind::II, 0};
    if (a == 1 && b >= 2 && d == 3) return {KodairaType::Kind::III, 0};
    if (b == 2 && a >= 2 && d == 4) return {KodairaType::Kind::IV, 0};
    if (a >= 2 && b >= 3 && d == 6) return KodairaType::Instar(0);
    if (a == 2 && b == 3 && d > 6) return KodairaType::Instar(d - 6);
    if (b == 4 && a >= 3 && d == 8) return {KodairaType::Kind::IVstar, 0};
    if (a == 3 && b >= 5 && d == 9) return {KodairaType::Kind::IIIstar, 0};
    if (b == 5 && a >= 4 && d == 10) return {KodairaType::Kind::IIstar, 0};
    throw bad();
}

KodairaType classify_finite_fiber(const WeierstrassFibration& fib, const PolyQ& factor) {
    if (factor.degree() < 1) throw Error("BadLocation", "location factor must be nonconstant");
    PolyQ d = discriminant(fib);
    int od = order_at_factor(d, factor);
    if (od == 0) throw Error("SmoothFiber", "factor does not divide the discriminant");
    int oa = fib.g2.is_zero() ? od + 100 : order_at_factor(fib.g2, factor);
    int ob = fib.g3.is_zero() ? od + 100 : order_at_factor(fib.g3, factor);
    return classify_from_orders(oa, ob, od);
}

KodairaType classify_finite_fiber(const WeierstrassFibration& fib, const Rational& location) {
    return classify_finite_fiber(fib, PolyQ{-location, Rational(1)});
}

KodairaType classify_infinity_fiber(const WeierstrassFibration& fib) {
    if (fib.g2.degree() > fib.weight_g2 || fib.g3.degree() > fib.weight_g3)
        throw Error("WeightOverflow", "section degrees exceed the stated weights");
    PolyQ d = discriminant(fib);
    int oa = fib.g2.is_zero() ? 1000 : fib.weight_g2 - fib.g2.degree();
    int ob = fib.g3.is_zero() ? 1000 : fib.weight_g3 - fib.g3.degree();
    int od = 2 * fib.weight_g3 - d.degree();
    // Quadruple shifts (g2, g3) -> (g2/t^4, g3/t^6) at infinity produce
    // the minimal model there.
    while (oa >= 4 && ob >= 6 && od >= 12) {
        oa -= 4;
        ob -= 6;
        od -= 12;
    }
    if (od == 0) throw Error("NotSingularAtInfinity", "fiber at infinity is smooth");
    return classify_from_orders(std::min(oa, 100), std::min(ob, 100), od);
}

namespace {

// Split the square-free factors of Delta so each piece has uniform
// valuations of g2 and g3 across its roots.
void refine_against(std::vector<PolyQ>& pieces, const PolyQ& poly) {
    if (poly.is_zero()) return;
    std::vector<PolyQ> out;
    for (const auto& piece : pieces) {
        PolyQ rem = piece;
        PolyQ g = poly_gcd(rem, poly);
        while (g.degree() > 0 && g.degree() < rem.degree()) {
            out.push_back(g);
            rem = rem / g;
            g = poly_gcd(rem, poly);
        }
        out.push_back(rem);
    }
    pieces = std::move(out);
}

} // namespace

std::vector<FiberRecord> full_fiber_table(const WeierstrassFibration& fib) {
    PolyQ d = discriminant(fib);
    std::vector<FiberRecord> table;

    RootStructure rs = squarefree_decompose(d);
    for (const auto& [factor, mult] : rs.factors) {
        std::vector<PolyQ> pieces{factor};
        // Split against every multiplicity layer of g2 and g3 so each
        // piece carries uniform valuations.
        if (!fib.g2.is_zero())
            for (const auto& [f2, m2] : squarefree_decompose(fib.g2).factors) refine_against(pieces, f2);
        if (!fib.g3.is_zero())
            for (const auto& [f3, m3] : squarefree_decompose(fib.g3).factors) refine_against(pieces, f3);
        for (const auto& piece : pieces) {
            if (piece.degree() < 1) continue;
            FiberRecord rec;
            rec.factor = piece;
            rec.delta_order = mult;
            rec.kodaira = classify_finite_fiber(fib, piece);
            for (const auto& r : complex_roots_auto(piece)) rec.approx.push_back(r.value);
            table.push_back(std::move(rec));
        }
    }
    try {
        KodairaType at_inf = classify_infinity_fiber(fib);
        FiberRecord rec;
        rec.at_infinity = true;
        rec.kodaira = at_inf;
        rec.delta_order = 2 * fib.weight_g3 - d.degree();
        table.push_back(std::move(rec));
    } catch (const Error& e) {
        if (e.code() != "NotSingularAtInfinity") throw;
    }
    return table;
}

int euler_sum(const std::vector<FiberRecord>& table) {
    int s = 0;
    for (const auto& rec : table)
        s += rec.kodaira.euler() * (rec.at_infinity ? 1 : rec.factor.degree());
    return s;
}

} // namespace k3
