#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fpp/datasets.hpp"
#include "fpp/interval.hpp"
#include "fpp/rational.hpp"

namespace fpp {

struct LvalueConfig {
    std::uint64_t primeLimit = 1'000'000;
    int precisionBits = 192;
    Int qmax = 1'000'000;
    bool twoPrecisionRecheck = true;
};

// Certified enclosure of zeta_K(s) at integer s >= 2: Euler product over all
// places above primes <= P, widened by the prime tail bound.
Interval zetaK(const NumberFieldRecord& field, int s, std::uint64_t primeLimit, int precBits);

// zeta_ell(s) / zeta_k(s) via per-prime local factor quotients.
Interval relL(const FieldPairRecord& pair, int s, std::uint64_t primeLimit, int precBits);

// Unique rational with denominator <= qmax in the enclosure.
// Requires rad < 1/(2 qmax^2).
Rat rationalReconstruct(const Interval& x, const Int& qmax);

// zeta_k(-1) via the functional equation + reconstruction (k totally real).
Rat zetaKMinus1Exact(const NumberFieldRecord& field, const LvalueConfig& cfg);

// L_{ell|k}(-2) via the functional equation + reconstruction.
Rat relLMinus2Exact(const FieldPairRecord& pair, const LvalueConfig& cfg);

// enclosure of zeta_k(-1) (resp. L(-2)) before reconstruction
Interval zetaKMinus1Enclosure(const NumberFieldRecord& field, std::uint64_t primeLimit,
                              int precBits);
Interval relLMinus2Enclosure(const FieldPairRecord& pair, std::uint64_t primeLimit, int precBits);

// Quadratic Dirichlet character of fundamental discriminant D.
struct QuadraticCharacter {
    Int fundamentalDisc;
    Int conductor;
    int operator()(const Int& n) const;
    bool isOdd() const { return fundamentalDisc < 0; }
};

QuadraticCharacter quadraticCharacter(const Int& fundamentalDisc);

// Exact L(1-n, chi) = -B_{n,chi}/n for primitive quadratic chi, n in {2,3}.
Rat bernoulliL(const QuadraticCharacter& chi, int n);

} // namespace fpp
