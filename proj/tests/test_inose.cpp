#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/inose.hpp"

using namespace k3;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

std::mt19937_64 rng(0x5eed0003ULL);
Rational random_rational(long bound = 30) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("modular invariants") {
    CHECK(modular_invariants(InoseContext(Q(1), Q(0))).pi == Q(1));
    CHECK(modular_invariants(InoseContext(Q(1), Q(0))).sigma == Q(2));
    CHECK(modular_invariants(InoseContext(Q(0), Q(1))).pi == Q(0));
    CHECK(modular_invariants(InoseContext(Q(0), Q(1))).sigma == Q(0));
    CHECK(modular_invariants(InoseContext(Q(2), Q(3))).pi == Q(8));
    CHECK(modular_invariants(InoseContext(Q(2), Q(3))).sigma == Q(0));
}

TEST_CASE("j pair from the invariant quadratic") {
    JPair p = j_pair(InoseContext(Q(1), Q(0)));
    CHECK(p.j1 == QuadExt(Q(1)));
    CHECK(p.j2 == QuadExt(Q(1)));

    p = j_pair(InoseContext(Q(0), Q(1)));
    CHECK(p.j1 == QuadExt(Q(0)));
    CHECK(p.j2 == QuadExt(Q(0)));

    p = solve_j_quadratic(Q(5), Q(4));
    CHECK(((p.j1 == QuadExt(Q(4)) && p.j2 == QuadExt(Q(1))) ||
           (p.j1 == QuadExt(Q(1)) && p.j2 == QuadExt(Q(4)))));

    // symmetric function identities, exact, incl. surd cases
    for (int i = 0; i < 100; ++i) {
        InoseContext ctx(random_rational(), random_rational());
        ModularInvariants mi = modular_invariants(ctx);
        JPair jp = j_pair(ctx);
        CHECK(jp.j1 + jp.j2 == QuadExt(mi.sigma));
        CHECK(jp.j1 * jp.j2 == QuadExt(mi.pi));
    }
}

TEST_CASE("from_j_pair inverts the invariant map") {
    FromJPair r = from_j_pair(Q(1), Q(1));
    REQUIRE(r.rational.size() == 1);
    CHECK(r.rational[0] == InoseParams{Q(1), Q(0)});

    r = from_j_pair(Q(0), Q(0));
    REQUIRE(r.rational.size() == 2);
    CHECK(r.rational[0] == InoseParams{Q(0), Q(1)});
    CHECK(r.rational[1] == InoseParams{Q(0), Q(-1)});

    // a^3 = 343/243 is not a rational cube: radicand description only
    r = from_j_pair(Q(1), Q(343, 243));
    CHECK(r.rational.empty());
    CHECK(r.a_cubed == Q(343, 243));
    CHECK(r.b_squared == Q(0));

    // roundtrip on 200 random rational (a,b)
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(), b = random_rational();
        InoseContext ctx(a, b);
        JPair jp = j_pair(ctx);
        FromJPair back = from_j_pair(jp.j1, jp.j2);
        bool found = false;
        for (const auto& cand : back.rational)
            if (cand.a == a && (cand.b == b || cand.b == -b)) found = true;
        CHECK(found);
    }
}

TEST_CASE("theta2 weierstrass data") {
    InoseContext c00(Q(0), Q(0));
    WeierstrassFibration fib = theta2_weierstrass(c00);
    // g2 = 1 - (64/3) lambda^6
    PolyQ expect = PolyQ::one() - PolyQ::monomial(Q(64, 3), 6);
    CHECK(fib.g2 == expect);
    CHECK(fib.g3.degree() == 9);
    CHECK(classify_infinity_fiber(fib) == KodairaType::Instar(12));
}

TEST_CASE("fiber case tags") {
    CHECK(theta2_fiber_case(InoseContext(Q(0), Q(0))) == Theta2Case::Generic);
    CHECK(theta2_fiber_case(InoseContext(Q(4), Q(7))) == Theta2Case::TangentPlus);
    CHECK(theta2_fiber_case(InoseContext(Q(4), Q(-9))) == Theta2Case::TangentPlus);
    CHECK(theta2_fiber_case(InoseContext(Q(4), Q(9))) == Theta2Case::TangentMinus);
    CHECK(theta2_fiber_case(InoseContext(Q(4), Q(-7))) == Theta2Case::TangentMinus);
    CHECK(theta2_fiber_case(InoseContext(Q(0), Q(1))) == Theta2Case::AZeroBUnit);
    CHECK(theta2_fiber_case(InoseContext(Q(0), Q(-1))) == Theta2Case::AZeroBUnit);
    CHECK(theta2_fiber_case(InoseContext(Q(1), Q(0))) == Theta2Case::ACubeOneBZero);
    CHECK(theta2_fiber_case(InoseContext(Q(1), Q(2))) == Theta2Case::TangentMinus); // 1 = (2-1)^2
    CHECK(theta2_fiber_case(InoseContext(Q(1), Q(3))) == Theta2Case::Generic);
}

TEST_CASE("case tags agree with fiber tables") {
    auto count_of = [](const std::vector<FiberRecord>& t, const KodairaType& k) {
        int n = 0;
        for (const auto& rec : t)
            if (rec.kodaira == k) n += rec.at_infinity ? 1 : rec.factor.degree();
        return n;
    };
    struct Case {
        Rational a, b;
        Theta2Case tag;
        int i1, i2, i3;
    };
    std::vector<Case> cases = {
        {Q(0), Q(0), Theta2Case::Generic, 6, 0, 0},
        {Q(4), Q(7), Theta2Case::TangentPlus, 4, 1, 0},
        {Q(4), Q(9), Theta2Case::TangentMinus, 4, 1, 0},
        {Q(0), Q(-1), Theta2Case::AZeroBUnit, 3, 0, 1},
        {Q(1), Q(0), Theta2Case::ACubeOneBZero, 2, 2, 0},
    };
    for (const auto& c : cases) {
        InoseContext ctx(c.a, c.b);
        CHECK(theta2_fiber_case(ctx) == c.tag);
        auto t = full_fiber_table(theta2_weierstrass(ctx));
        CHECK(count_of(t, KodairaType::In(1)) == c.i1);
        CHECK(count_of(t, KodairaType::In(2)) == c.i2);
        CHECK(count_of(t, KodairaType::In(3)) == c.i3);
        // psi2 doubles the finite orders
        auto tp = full_fiber_table(psi2_weierstrass(ctx));
        CHECK(count_of(tp, KodairaType::In(2)) == c.i1);
        CHECK(count_of(tp, KodairaType::In(4)) == c.i2);
        CHECK(count_of(tp, KodairaType::In(6)) == c.i3);
    }
}

TEST_CASE("theta2 and psi2 share their finite singular locus") {
    for (int i = 0; i < 30; ++i) {
        InoseContext ctx(random_rational(9), random_rational(9));
        RootStructure a = squarefree_decompose(discriminant(theta2_weierstrass(ctx)));
        RootStructure b = squarefree_decompose(discriminant(psi2_weierstrass(ctx)));
        PolyQ pa = PolyQ::one(), pb = PolyQ::one();
        for (const auto& [f, m] : a.factors) pa *= f;
        for (const auto& [f, m] : b.factors) pb *= f;
        CHECK(pa == pb); // same reduced root set: P^2 = 1
    }
}

TEST_CASE("inose quartic geometry") {
    for (int i = 0; i < 10; ++i) {
        InoseContext ctx(random_rational(9), random_rational(9));
        MPoly4Q q = inose_quartic(ctx);
        int deg = 0;
        CHECK(q.is_homogeneous(&deg));
        CHECK(deg == 4);
        // gradient vanishes at [0,1,0,0] and [0,0,1,0]
        std::array<Rational, 4> p1 = {Q(0), Q(1), Q(0), Q(0)};
        std::array<Rational, 4> p2 = {Q(0), Q(0), Q(1), Q(0)};
        for (int v = 0; v < 4; ++v) {
            CHECK(q.partial(v).evaluate(p1) == Q(0));
            CHECK(q.partial(v).evaluate(p2) == Q(0));
        }
        CHECK(q.evaluate(p1) == Q(0));
        CHECK(q.evaluate(p2) == Q(0));
    }
}

TEST_CASE("fiber cubic from direct substitution") {
    InoseContext ctx(Q(2), Q(3));
    for (long l : {0L, 1L, -2L, 5L}) {
        Rational lambda(l);
        MPoly4Q cubic = fiber_cubic(ctx, lambda);
        Rational P = ctx.p_poly(lambda);
        // reconciled display: 2 y^2 z - 2 P(lambda) z w^2 - z^2 w - w^3
        MPoly4Q expect = MPoly4Q::term(Q(2), 0, 2, 1, 0) +
                         MPoly4Q::term(Q(-2) * P, 0, 0, 1, 2) +
                         MPoly4Q::term(Q(-1), 0, 0, 2, 1) + MPoly4Q::term(Q(-1), 0, 0, 0, 3);
        CHECK(cubic == expect);
    }
}

TEST_CASE("quartic is smooth along sampled non-special surface points") {
    InoseContext ctx(Q(0), Q(0));
    MPoly4Q q = inose_quartic(ctx);
    // points of the affine fiber cubic over quadratic extensions
    int nonzero_gradients = 0;
    for (long l : {1L, 2L, 3L}) {
        Rational lambda(l);
        Rational P = ctx.p_poly(lambda);
        for (long zi : {1L, 2L, -1L}) {
            Rational z(zi);
            Rational y2 = (z * z + Q(2) * P * z + Q(1)) / (Q(2) * z);
            QuadExt y = QuadExt::sqrt_of(y2);
            std::array<QuadExt, 4> pt = {QuadExt(lambda), y, QuadExt(z), QuadExt(Q(1))};
            // on the surface
            MPoly4<QuadExt> qe;
            for (const auto& [e, c] : q.terms()) qe.add_term(QuadExt(c), e);
            CHECK(qe.evaluate(pt).is_zero());
            bool any = false;
            for (int v = 0; v < 4; ++v)
                if (!qe.partial(v).evaluate(pt).is_zero()) any = true;
            if (any) ++nonzero_gradients;
        }
    }
    CHECK(nonzero_gradients == 9);
}

TEST_CASE("involution certificate") {
    for (int i = 0; i < 8; ++i) {
        InoseContext ctx(random_rational(9), random_rational(9));
        ProjectiveMap beta = involution_beta(ctx);
        InvolutionCertificate cert = verify_involution(ctx, beta);
        CHECK(cert.ok);
        CHECK(cert.square_is_identity);
        CHECK(cert.residual.is_zero());
    }
    // fiber-level map [y,z,w] -> [-yz, w^2, zw] squares to the identity
    MPoly4Q y = MPoly4Q::var(1), z = MPoly4Q::var(2), w = MPoly4Q::var(3);
    std::array<MPoly4Q, 4> fmap = {MPoly4Q::var(0), -(y * z), w * w, z * w};
    std::array<MPoly4Q, 4> sq;
    for (int i = 0; i < 4; ++i) sq[static_cast<size_t>(i)] = fmap[static_cast<size_t>(i)].substitute(fmap);
    // components proportional to (., y, z, w) by z w^2
    MPoly4Q factor = z * w * w;
    CHECK(sq[1] == factor * y);
    CHECK(sq[2] == factor * z);
    CHECK(sq[3] == factor * w);
}

TEST_CASE("quotient substitution lands on the psi2 cubic") {
    CHECK(quotient_substitution_check(InoseContext(Q(0), Q(0)), Q(1)));
    CHECK(quotient_substitution_check(InoseContext(Q(2), Q(3)), Q(0)));
    CHECK(quotient_substitution_check(InoseContext(Q(5), Q(-2)), Q(3)));
    // P(1)^2 = 1 for (a,b) = (1,0): precondition violation
    CHECK_THROWS_AS(quotient_substitution_check(InoseContext(Q(1), Q(0)), Q(1)), Error);
}

TEST_CASE("numeric mode mirrors the exact headline operations") {
    BigComplex a(Q(1), 256), b(Q(0), 256);
    auto mi = modular_invariants_numeric(a, b);
    CHECK((mi.pi - BigComplex(Q(1), 256)).abs().to_double() < 1e-70);
    CHECK((mi.sigma - BigComplex(Q(2), 256)).abs().to_double() < 1e-70);
    auto jp = j_pair_numeric(a, b);
    CHECK((jp.j1 - BigComplex(Q(1), 256)).abs().to_double() < 1e-30);

    auto candidates = from_j_pair_numeric(BigComplex(Q(1), 256), BigComplex(Q(1), 256));
    bool found = false;
    for (const auto& [ca, cb] : candidates)
        if ((ca - BigComplex(Q(1), 256)).abs().to_double() < 1e-30 && cb.abs().to_double() < 1e-30)
            found = true;
    CHECK(found);

    // numeric fiber clustering matches the exact multiplicity patterns
    auto t0 = theta2_fibers_numeric(BigComplex(Q(0), 192), BigComplex(Q(0), 192), 128);
    CHECK(t0.size() == 6);
    for (const auto& f : t0) CHECK(f.delta_order == 1);
    auto p1 = psi2_fibers_numeric(BigComplex(Q(1), 192), BigComplex(Q(0), 192), 128);
    std::multiset<int> orders;
    for (const auto& f : p1) orders.insert(f.delta_order);
    CHECK(orders == std::multiset<int>{2, 2, 4, 4});
}
