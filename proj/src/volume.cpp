#include "fpp/volume.hpp"

#include "fpp/errors.hpp"
#include "fpp/lvalues.hpp"

namespace fpp {

const char* parahoricName(ParahoricKind k) {
    switch (k) {
        case ParahoricKind::Hyperspecial: return "hyperspecial";
        case ParahoricKind::RamifiedMaximal: return "ramified-maximal";
        case ParahoricKind::SplitIwahori: return "split-iwahori";
        case ParahoricKind::SplitNonHyperspecialMaximal: return "split-nonhyperspecial-maximal";
        case ParahoricKind::InertIwahori: return "inert-iwahori";
        case ParahoricKind::InertNonHyperspecialMaximal: return "inert-nonhyperspecial-maximal";
        case ParahoricKind::RamifiedIwahori: return "ramified-iwahori";
        case ParahoricKind::Anisotropic: return "anisotropic";
    }
    return "?";
}

EulerFactor eulerFactor(const ParahoricChoice& c) {
    const Int& q = c.q;
    EulerFactor r;
    switch (c.kind) {
        case ParahoricKind::Hyperspecial:
        case ParahoricKind::RamifiedMaximal:
            r.ePrime = 1;
            r.eDoublePrime = 1;
            break;
        case ParahoricKind::SplitIwahori:
            r.ePrime = (q * q + q + 1) * (q + 1);
            r.eDoublePrime = Rat(r.ePrime, 3);
            r.xi = 3;
            break;
        case ParahoricKind::SplitNonHyperspecialMaximal:
            r.ePrime = q * q + q + 1;
            r.eDoublePrime = Rat(r.ePrime);
            break;
        case ParahoricKind::InertIwahori:
            r.ePrime = q * q * q + 1;
            r.eDoublePrime = Rat(r.ePrime);
            break;
        case ParahoricKind::InertNonHyperspecialMaximal:
            r.ePrime = q * q - q + 1;
            r.eDoublePrime = Rat(r.ePrime);
            break;
        case ParahoricKind::RamifiedIwahori:
            r.ePrime = q + 1;
            r.eDoublePrime = Rat(r.ePrime);
            break;
        case ParahoricKind::Anisotropic:
            r.ePrime = (q - 1) * (q - 1) * (q + 1);
            r.eDoublePrime = Rat(r.ePrime, 3);
            break;
    }
    if (r.eDoublePrime < 1)
        fail(Err::Invariant, "e'' < 1 for " + std::string(parahoricName(c.kind)) +
                                 " at q=" + q.get_str());
    return r;
}

int VolumeContext::t0Count() const {
    int n = 0;
    for (auto& l : locals)
        if (l.choice.kind == ParahoricKind::Anisotropic) ++n;
    return n;
}

void VolumeContext::validate() const {
    if (!pair) fail(Err::Invariant, "VolumeContext without pair");
    for (auto& l : locals) {
        if (l.choice.q != l.place.q)
            fail(Err::Invariant, "local datum q mismatch at p=" + std::to_string(l.place.p));
        bool ok = false;
        switch (l.choice.kind) {
            case ParahoricKind::Anisotropic:
            case ParahoricKind::SplitIwahori:
            case ParahoricKind::SplitNonHyperspecialMaximal:
                ok = l.cls == RelativePlaceClass::SplitInL;
                break;
            case ParahoricKind::InertIwahori:
            case ParahoricKind::InertNonHyperspecialMaximal:
                ok = l.cls == RelativePlaceClass::InertInL;
                break;
            case ParahoricKind::RamifiedIwahori:
            case ParahoricKind::RamifiedMaximal:
                ok = l.cls == RelativePlaceClass::RamifiedInL;
                break;
            case ParahoricKind::Hyperspecial:
                ok = l.cls != RelativePlaceClass::RamifiedInL;
                break;
        }
        if (!ok)
            fail(Err::Invariant, std::string("parahoric kind ") + parahoricName(l.choice.kind) +
                                     " incompatible with " + relativeClassName(l.cls) +
                                     " place over " + std::to_string(l.place.p));
    }
}

Rat muBase(const FieldPairRecord& pair) {
    int d = pair.k->degree;
    Rat twoPow(Int(1) << (2 * d));
    return pair.zetaKminus1 * pair.Lminus2 / twoPow;
}

Rat muPrincipal(const VolumeContext& ctx) {
    ctx.validate();
    Rat m = muBase(*ctx.pair);
    for (auto& l : ctx.locals) m *= Rat(eulerFactor(l.choice).ePrime);
    return m;
}

Int indexUpperBound(const VolumeContext& ctx, const Int& h3) {
    Int r = intPow(Int(3), 1 + (unsigned long)ctx.t0Count()) * h3;
    for (auto& l : ctx.locals)
        if (l.choice.kind != ParahoricKind::Anisotropic)
            r *= eulerFactor(l.choice).xi;
    return r;
}

ChiResult chiLambdaAndGammaLower(const VolumeContext& ctx, const Int& h3) {
    ChiResult res;
    res.muBase = muBase(*ctx.pair);
    res.muLambda = muPrincipal(ctx);
    res.chiLambda = 3 * res.muLambda;
    res.indexUpper = indexUpperBound(ctx, h3);
    Rat prod(1);
    for (auto& l : ctx.locals) prod *= eulerFactor(l.choice).eDoublePrime;
    res.chiGammaLower = res.muBase * prod / Rat(h3);
    res.powerOf3 = isPowerOfThree(res.muLambda.get_num());
    return res;
}

Rat chiPicard(std::uint64_t a, const PairTable& pairs) {
    const FieldPairRecord* p = pairs.byLabel("A" + std::to_string(a));
    if (!p || !p->isRationalBase())
        fail(Err::Domain, "chiPicard: a=" + std::to_string(a) + " is not a bundled base-Q field");
    return -p->Lminus2 / 16;
}

Interval muBaseAnalytic(const FieldPairRecord& pair, std::uint64_t primeLimit, int precBits) {
    int d = pair.k->degree;
    Interval z2 = zetaK(*pair.k, 2, primeLimit, precBits);
    Interval L3 = relL(pair, 3, primeLimit, precBits);
    Interval Dl = Interval::fromInt(pair.ell->absDisc, precBits);
    Interval Dk = Interval::fromInt(pair.k->absDisc, precBits);
    Interval pi5 = Interval::pi(precBits).powInt(5);
    Interval denom = (Interval::fromInt(16L, precBits) * pi5).powInt(d) * Dk;
    return Dl.powInt(5).sqrt() * z2 * L3 / denom;
}

} // namespace fpp
