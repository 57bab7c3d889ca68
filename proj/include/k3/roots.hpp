#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3/bigcomplex.hpp"
#include "k3/poly.hpp"

namespace k3 {

enum class FieldNote { Rational, Quadratic, Numeric };

// Exact multiplicity structure of a polynomial: pairwise-coprime monic
// square-free factors with multiplicities whose weighted product equals
// the input up to the leading unit.
struct RootStructure {
    std::vector<std::pair<PolyQ, int>> factors;
    Rational unit;
    FieldNote field_note = FieldNote::Rational;

    PolyQ recombine() const {
        PolyQ p = PolyQ::one();
        for (const auto& [f, m] : factors) p *= f.pow(m);
        return p * unit;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [f, m] : factors) d += f.degree() * m;
        return d;
    }
};

RootStructure squarefree_decompose(const PolyQ& f);

struct ComplexRoot {
    BigComplex value;
    int multiplicity;
};

// Numeric roots with exact multiplicities: square-free factorization and
// rational-root extraction first, then Aberth iteration on the
// square-free remainders. Throws "PrecisionExhausted" when distinct
// roots cannot be separated at the requested precision.
std::vector<ComplexRoot> complex_roots(const PolyQ& f, long precision_bits);

// Doubling retry 128 -> 1024 before giving up.
std::vector<ComplexRoot> complex_roots_auto(const PolyQ& f, long start_bits = 128);

// Roots of a square-free polynomial given directly with complex
// coefficients (numeric-mode inputs).
std::vector<BigComplex> aberth_roots(const Poly<BigComplex>& f, long precision_bits);

} // namespace k3
