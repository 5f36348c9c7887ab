#pragma once

#include <vector>

#include "fpp/datasets.hpp"
#include "fpp/ffpoly.hpp"
#include "fpp/interval.hpp"
#include "fpp/rational.hpp"

namespace fpp {

enum class ParahoricKind {
    Hyperspecial,
    RamifiedMaximal,
    SplitIwahori,
    SplitNonHyperspecialMaximal,
    InertIwahori,
    InertNonHyperspecialMaximal,
    RamifiedIwahori,
    Anisotropic,
};

const char* parahoricName(ParahoricKind k);

struct ParahoricChoice {
    ParahoricKind kind = ParahoricKind::Hyperspecial;
    Int q;   // residue cardinality of the place
};

struct EulerFactor {
    Int ePrime;        // e'(P_v), an integer for every kind
    Rat eDoublePrime;  // e''(P_v)
    int xi = 1;        // #Xi, 3 exactly for split Iwahori
};

EulerFactor eulerFactor(const ParahoricChoice& c);

// local datum at a place of k
struct LocalDatum {
    PlaceOfK place;
    RelativePlaceClass cls;
    ParahoricChoice choice;
};

struct VolumeContext {
    const FieldPairRecord* pair = nullptr;
    std::vector<LocalDatum> locals;   // every non-hyperspecial choice, incl. e'=1 ones

    int t0Count() const;              // anisotropic places
    void validate() const;            // kind/class compatibility
};

// mu = 2^(-2d) zeta_k(-1) L(-2), from the pair's verified exact values
Rat muBase(const FieldPairRecord& pair);

// mu(G/Lambda) = mu * prod e'(P_v)
Rat muPrincipal(const VolumeContext& ctx);

Int indexUpperBound(const VolumeContext& ctx, const Int& h3);

struct ChiResult {
    Rat muBase;
    Rat muLambda;
    Rat chiLambda;
    Int indexUpper;
    Rat chiGammaLower;
    bool powerOf3 = false;
};

ChiResult chiLambdaAndGammaLower(const VolumeContext& ctx, const Int& h3);

// chi(Lambda) for the minimal-covolume quasi-split lattice over Q(sqrt(-a))
Rat chiPicard(std::uint64_t a, const PairTable& pairs);

// interval form of mu via D_l^(5/2) zeta_k(2) L(3) / ((16 pi^5)^d D_k),
// for the functional-equation consistency check
Interval muBaseAnalytic(const FieldPairRecord& pair, std::uint64_t primeLimit, int precBits);

} // namespace fpp
