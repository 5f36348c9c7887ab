#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fpp/datasets_fwd.hpp"
#include "fpp/rational.hpp"

namespace fpp {

// Polynomial over F_p, coefficients ascending, normalized (no leading zeros).
struct PrimeFieldPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> coeffs;

    int degree() const { return (int)coeffs.size() - 1; }
};

PrimeFieldPoly reduceModP(const std::vector<Int>& coeffs, std::uint64_t p);

// Distinct-degree factorization degrees: map degree -> number of irreducible
// factors of that degree.  Requires squarefree input (gcd(f, f') = 1).
std::map<int, int> ddfDegreeMultiset(const PrimeFieldPoly& poly);

struct PlaceOverP {
    int e = 1;
    int f = 1;
};

enum class PatternSource { Computed, Bundled };

struct SplittingPattern {
    std::uint64_t p = 0;
    std::vector<PlaceOverP> places;   // sorted by (e, f) descending
    PatternSource source = PatternSource::Computed;
};

// Place of a number field: prime p, residue degree f, q = p^f.  The
// multiplicity tag distinguishes equal-(e,f) places over the same p;
// the ordering (p, f, tag) is the canonical place order everywhere.
struct PlaceOfK {
    std::uint64_t p = 0;
    int e = 1;
    int f = 1;
    Int q;
    int multiplicityTag = 0;
};

enum class RelativePlaceClass { SplitInL, InertInL, RamifiedInL };

const char* relativeClassName(RelativePlaceClass c);

SplittingPattern splittingPattern(const NumberFieldRecord& field, std::uint64_t p);

// Split/inert/ramified classification of p in Q(sqrt(-a))/Q.
RelativePlaceClass kroneckerClass(std::uint64_t a, std::uint64_t p);

std::vector<PlaceOfK> placesUpToNorm(const NumberFieldRecord& field, const Int& bound);
std::vector<PlaceOfK> placesOverP(const NumberFieldRecord& field, std::uint64_t p);

// Class of a k-place in ell, by multiset matching of the ell-pattern over p
// against the k-pattern.  Hard error when several consistent matchings
// disagree about the queried place.
RelativePlaceClass relativeClass(const FieldPairRecord& pair, const PlaceOfK& place);

// Number of places of k ramified in ell over p (matching-invariant), and in
// total over all primes dividing relDiscNorm.
int ramifiedPlaceCountOverP(const FieldPairRecord& pair, std::uint64_t p);
int ramifiedPlaceCount(const FieldPairRecord& pair);

std::vector<std::uint64_t> primesUpTo(std::uint64_t n);

} // namespace fpp
