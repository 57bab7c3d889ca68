#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/cubicext.hpp"
#include "k3/poly.hpp"
#include "k3/quadext.hpp"
#include "k3/rational.hpp"
#include "k3/roots.hpp"

using namespace k3;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

std::mt19937_64 rng(0x5eed0001ULL);

Rational random_rational(long bound = 20) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

PolyQ random_poly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(9));
    return PolyQ(std::move(c));
}

} // namespace

TEST_CASE("rational normalization and wire format") {
    Rational r(6, -4);
    CHECK(r.num() == Integer(-3));
    CHECK(r.den() == Integer(2));
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational::parse("10/5").to_string() == "2");
    CHECK(Rational::parse("-7").to_string() == "-7");
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
    CHECK((Q(7, 2) * Q(4, 7)) == Q(2));
    CHECK(Q(-5, 3).pow(2) == Q(25, 9));
    CHECK(Q(8, 27).exact_cbrt().value() == Q(2, 3));
    CHECK(!Q(343, 243).exact_cbrt().has_value());
    CHECK(Q(9, 4).exact_sqrt().value() == Q(3, 2));
}

TEST_CASE("rational arithmetic reconstructs exactly on random samples") {
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(1000), b = random_rational(1000);
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("polynomial basics") {
    PolyQ f{Q(-8), Q(-12), Q(0), Q(4)}; // 4X^3 - 12X - 8
    CHECK(f.degree() == 3);
    CHECK(f(Q(-1)) == Q(0));
    CHECK(f(Q(2)) == Q(0));
    PolyQ g{Q(1), Q(1)};
    CHECK((f * g).degree() == 4);
    auto [q, r] = divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q * g == f);

    // degree(f*g) = deg f + deg g on random nonzero samples
    for (int i = 0; i < 100; ++i) {
        PolyQ a = random_poly(6), b = random_poly(6);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("squarefree decomposition matches the worked example") {
    // 4X^3 - 12X - 8 = 4 (X+1)^2 (X-2)
    PolyQ f{Q(-8), Q(-12), Q(0), Q(4)};
    RootStructure rs = squarefree_decompose(f);
    REQUIRE(rs.factors.size() == 2);
    CHECK(rs.unit == Q(4));
    bool saw_double = false, saw_single = false;
    for (const auto& [fac, m] : rs.factors) {
        if (m == 2) {
            CHECK(fac == PolyQ{Q(1), Q(1)});
            saw_double = true;
        }
        if (m == 1) {
            CHECK(fac == PolyQ{Q(-2), Q(1)});
            saw_single = true;
        }
    }
    CHECK(saw_double);
    CHECK(saw_single);
    CHECK(rs.recombine() == f);

    RootStructure rx = squarefree_decompose(PolyQ{Q(0), Q(1)});
    REQUIRE(rx.factors.size() == 1);
    CHECK(rx.factors[0].second == 1);

    // (X^2+1)^2
    PolyQ h = PolyQ{Q(1), Q(0), Q(1)}.pow(2);
    RootStructure rh = squarefree_decompose(h);
    REQUIRE(rh.factors.size() == 1);
    CHECK(rh.factors[0].second == 2);
    CHECK(rh.factors[0].first == PolyQ{Q(1), Q(0), Q(1)});

    CHECK_THROWS_WITH_AS(squarefree_decompose(PolyQ()), doctest::Contains("ZeroPolynomial"), Error);
}

TEST_CASE("squarefree recombination property on random products") {
    for (int i = 0; i < 1000; ++i) {
        PolyQ f = random_poly(4), g = random_poly(4);
        PolyQ p = f * g;
        if (p.is_zero()) continue;
        RootStructure rs = squarefree_decompose(p);
        CHECK(rs.recombine() == p);
        // pairwise coprime and squarefree
        for (size_t a = 0; a < rs.factors.size(); ++a) {
            CHECK(poly_gcd(rs.factors[a].first, rs.factors[a].first.derivative()).degree() == 0);
            for (size_t b = a + 1; b < rs.factors.size(); ++b)
                CHECK(poly_gcd(rs.factors[a].first, rs.factors[b].first).degree() == 0);
        }
    }
}

TEST_CASE("complex roots of X^2+1") {
    auto roots = complex_roots(PolyQ{Q(1), Q(0), Q(1)}, 128);
    REQUIRE(roots.size() == 2);
    BigFloat tol = BigFloat::pow2(-100, 128);
    for (const auto& r : roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.value.re().abs() <= tol);
        CHECK((r.value.im().abs() - BigFloat(1.0, 128)).abs() <= tol);
    }
}

TEST_CASE("complex roots track exact multiplicities") {
    PolyQ f{Q(-8), Q(-12), Q(0), Q(4)};
    auto roots = complex_roots(f, 128);
    REQUIRE(roots.size() == 2);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == 3);
    for (const auto& r : roots) {
        if (r.multiplicity == 2) CHECK((r.value - BigComplex(Q(-1), 128)).abs().to_double() < 1e-25);
        if (r.multiplicity == 1) CHECK((r.value - BigComplex(Q(2), 128)).abs().to_double() < 1e-25);
    }
}

TEST_CASE("complex roots of X^3 - 1/4 have modulus (1/4)^(1/3)") {
    auto roots = complex_roots(PolyQ{Q(-1, 4), Q(0), Q(0), Q(1)}, 128);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) {
        BigFloat m = r.value.abs();
        BigFloat cubed = m * m * m;
        CHECK((cubed - BigFloat(Q(1, 4), 128)).abs().to_double() < 1e-30);
    }
}

TEST_CASE("conjugate closure for real-coefficient inputs") {
    PolyQ f{Q(3), Q(-1), Q(2), Q(0), Q(1), Q(1)};
    auto roots = complex_roots_auto(f);
    int total = 0;
    for (const auto& r : roots) {
        total += r.multiplicity;
        bool has_conj = false;
        for (const auto& s : roots)
            if ((s.value - r.value.conj()).abs().to_double() < 1e-20) has_conj = true;
        CHECK(has_conj);
    }
    CHECK(total == f.degree());
}

TEST_CASE("precision exhaustion on a near-degenerate pair is recoverable") {
    // (X^2 - 2)(X^2 - 2 - 2^-120): irrational roots 2^-122 apart need
    // enough working bits to separate.
    Rational eps(Integer(1), Integer(2).pow(120));
    PolyQ x2{Q(-2), Q(0), Q(1)};
    PolyQ f = x2 * (x2 - PolyQ(eps));
    CHECK_THROWS_WITH_AS(complex_roots(f, 64), doctest::Contains("PrecisionExhausted"), Error);
    auto roots = complex_roots_auto(f, 64);
    CHECK(roots.size() == 4);
}

TEST_CASE("quadratic extension arithmetic") {
    // golden ratio field: (1 + sqrt5)/2
    QuadExt phi(Q(1, 2), Q(1, 2), Q(5));
    QuadExt one(Q(1));
    CHECK(phi * phi == phi + one); // x^2 = x + 1
    CHECK(phi.conj() * phi == -one);
    CHECK((phi / phi) == one);

    // perfect-square radicand collapses
    QuadExt r(Q(3), Q(2), Q(9, 4));
    CHECK(r.is_rational());
    CHECK(r.base() == Q(6));

    // radicand canonicalization: sqrt(8) = 2 sqrt(2), sqrt(1/2) = (1/2) sqrt 2
    QuadExt s = QuadExt::sqrt_of(Q(8));
    CHECK(s.radicand() == Integer(2));
    CHECK(s.coeff() == Q(2));
    QuadExt t = QuadExt::sqrt_of(Q(1, 2));
    CHECK(t.radicand() == Integer(2));
    CHECK(t.coeff() == Q(1, 2));
    CHECK(s * t == QuadExt(Q(2)));

    CHECK_THROWS_AS(QuadExt::sqrt_of(Q(2)) + QuadExt::sqrt_of(Q(3)), Error);
}

TEST_CASE("quadratic extension properties on random triples") {
    for (int i = 0; i < 200; ++i) {
        Rational d = random_rational(30);
        if (d.is_zero()) continue;
        QuadExt x(random_rational(), random_rational(), d);
        QuadExt y(random_rational(), random_rational(), d);
        QuadExt z(random_rational(), random_rational(), d);
        CHECK((x * y) * z == x * (y * z));
        CHECK(conj(x * y) == conj(x) * conj(y));
        CHECK(conj(conj(x)) == x);
    }
}

TEST_CASE("cubic extension ring") {
    Rational c = Q(-1, 9);
    CubicExt q = CubicExt::generator(c);
    CHECK(q * q * q == CubicExt(c));
    CubicExt x(Q(2), Q(-1, 3), Q(5), c);
    CHECK(x * x.inverse() == CubicExt(Q(1)));
    // associativity spot check
    CubicExt y(Q(1, 2), Q(4), Q(-2, 7), c);
    CubicExt z(Q(-3), Q(1, 5), Q(1), c);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);

    // splitting modulus: q^3 = 8 has rational root; some elements are not invertible
    CubicExt w(Q(-2), Q(1), Q(0), Q(8)); // q - 2 divides q^3 - 8
    CHECK_THROWS_AS(w.inverse(), Error);
}

TEST_CASE("polynomial arithmetic over an extension field") {
    // gcd over Q(sqrt(-3))
    Rational d = Q(-3);
    QuadExt omega(Q(1, 2), Q(1, 2), d); // (1+sqrt-3)/2, a primitive 6th root
    Poly<QuadExt> f{-omega, QuadExt(Q(1))};
    Poly<QuadExt> g = f * f * Poly<QuadExt>{QuadExt(Q(1)), QuadExt(Q(1))};
    auto [facs, unit] = squarefree_factorization(g);
    REQUIRE(facs.size() == 2);
    CHECK(unit == QuadExt(Q(1)));
}
