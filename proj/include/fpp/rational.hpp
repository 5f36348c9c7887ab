#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fpp {

using Int = mpz_class;
using Rat = mpq_class;   // always kept in canonical (reduced) form

// "num/den" or "num"; base 10
Rat ratFromString(const std::string& s);
std::string ratToString(const Rat& q);

Int intPow(const Int& b, unsigned long e);

// true iff n == 3^k for some k >= 0 (so 1 counts)
bool isPowerOfThree(const Int& n);

// Kronecker symbol (a|n), fully general
int kronecker(const Int& a, const Int& n);

// The unique rational with denominator <= qmax inside [lo, hi], if any.
// Throws NoCandidate / MultipleCandidates accordingly.
Rat uniqueRationalIn(const Rat& lo, const Rat& hi, const Int& qmax);

// Simplest (minimal-denominator) rational in the closed interval, if the
// interval is nonempty.
Rat simplestRationalIn(const Rat& lo, const Rat& hi);

} // namespace fpp
