#include "fpp/bounds.hpp"

#include <algorithm>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

const Rat kBernoulli[] = {
    Rat(1, 6),           Rat(-1, 30),         Rat(1, 42),         Rat(-1, 30),
    Rat(5, 66),          Rat(-691, 2730),     Rat(7, 6),          Rat(-3617, 510),
    Rat(43867, 798),     Rat(-174611, 330),   Rat(854513, 138),   Rat(-236364091, 2730),
    Rat(8553103, 6),
};
constexpr int kSeriesTerms = 10;   // remainder bounded by the B_22 term
constexpr long kShiftTo = 20;

Interval one(int p) { return Interval::fromInt(1L, p); }
Interval ratI(const Rat& q, int p) { return Interval::fromRat(q, p); }

} // namespace

Interval digamma(const Interval& x) {
    int prec = x.prec();
    if (mpfr_sgn(x.lo()) <= 0) fail(Err::Domain, "digamma requires positive argument");
    // shift to y = x + m with y >= kShiftTo
    Interval shifted = x;
    Interval harmonic = Interval::fromInt(0L, prec);
    long m = 0;
    while (mpfr_cmp_si(shifted.lo(), kShiftTo) < 0) {
        harmonic = harmonic + shifted.inv();
        shifted = shifted + one(prec);
        if (++m > 4000) fail(Err::Domain, "digamma shift too far");
    }
    // psi(y) = log y - 1/(2y) - sum B_2n/(2n y^2n) + R
    Interval y = shifted;
    Interval acc = y.log() - (Interval::fromInt(2L, prec) * y).inv();
    Interval y2 = (y * y).inv();
    Interval ypow = y2;
    for (int n = 1; n <= kSeriesTerms; ++n) {
        acc = acc - ratI(kBernoulli[n - 1] / (2 * n), prec) * ypow;
        ypow = ypow * y2;
    }
    Interval rem = ratI(abs(kBernoulli[kSeriesTerms] / (2 * (kSeriesTerms + 1))), prec) * ypow;
    Interval err = Interval::hull(-rem, rem);
    return acc + err - harmonic;
}

Interval trigamma(const Interval& x) {
    int prec = x.prec();
    if (mpfr_sgn(x.lo()) <= 0) fail(Err::Domain, "trigamma requires positive argument");
    Interval shifted = x;
    Interval harmonic = Interval::fromInt(0L, prec);
    long m = 0;
    while (mpfr_cmp_si(shifted.lo(), kShiftTo) < 0) {
        harmonic = harmonic + (shifted * shifted).inv();
        shifted = shifted + one(prec);
        if (++m > 4000) fail(Err::Domain, "trigamma shift too far");
    }
    // psi'(y) = 1/y + 1/(2y^2) + sum B_2n / y^(2n+1) + R
    Interval y = shifted;
    Interval yinv = y.inv();
    Interval acc = yinv + (Interval::fromInt(2L, prec) * y * y).inv();
    Interval y2 = (y * y).inv();
    Interval ypow = yinv * y2;   // y^-(3)
    for (int n = 1; n <= kSeriesTerms; ++n) {
        acc = acc + ratI(kBernoulli[n - 1], prec) * ypow;
        ypow = ypow * y2;
    }
    Interval rem = ratI(abs(kBernoulli[kSeriesTerms]), prec) * ypow;
    acc = acc + Interval::hull(-rem, rem);
    return acc + harmonic;
}

Interval regulatorLB(RegulatorKind kind, int d, int prec) {
    if (d < 1) fail(Err::Domain, "regulatorLB requires d >= 1");
    Rat c = kind == RegulatorKind::Zimmert ? Rat(1, 50) : Rat(17, 12500);
    Rat expo = kind == RegulatorKind::Zimmert ? Rat(d, 10) : Rat(57 * d, 100);
    return ratI(c, prec) * ratI(expo, prec).exp();
}

Interval brauerSiegelRHS(const Rat& s, int d, const Int& Dl, const Interval& zetaLs) {
    int prec = zetaLs.prec();
    if (s <= 1) fail(Err::Domain, "brauerSiegelRHS requires s > 1");
    Interval si = ratI(s, prec);
    Interval gam = si.gamma().powInt(d);
    Interval twoPi = Interval::fromInt(2L, prec) * Interval::pi(prec);
    Interval base = Interval::fromInt(Dl, prec) / twoPi.powInt(2 * d);
    Interval half = base.pow(ratI(s / 2, prec));
    return si * ratI(s - 1, prec) * gam * half * zetaLs;
}

namespace {

// (2^(3-delta) pi^(4-delta) Gamma(1+delta) zeta(1+delta)^2) as an interval
Interval gammaZetaCore(const Rat& delta, int prec) {
    Interval d1 = ratI(1 + delta, prec);
    Interval two = Interval::fromInt(2L, prec);
    Interval pi = Interval::pi(prec);
    return two.pow(ratI(3 - delta, prec)) * pi.pow(ratI(4 - delta, prec)) * d1.gamma() *
           d1.zeta().powInt(2);
}

Interval zeta2dSqrt(int d, int prec) {
    return Interval::fromInt(2L * d, prec).zeta().sqrt();
}

} // namespace

Interval phi1(int d, const Rat& rOverW, const Rat& delta, int prec) {
    if (delta <= 0 || delta > 2) fail(Err::Domain, "phi1 requires 0 < delta <= 2");
    Interval num = ratI(delta * (1 + delta), prec);
    Interval den = zeta2dSqrt(d, prec) * ratI(rOverW, prec);
    Interval first = (num / den).pow(ratI(Rat(1) / ((3 - delta) * d), prec));
    Interval second = gammaZetaCore(delta, prec).pow(ratI(Rat(1) / (3 - delta), prec));
    return first * second;
}

Interval phi2(int d, const Int& h3, int prec) {
    Interval num = Interval::fromInt(Int(1) << (4 * d), prec) *
                   Interval::pi(prec).powInt(5 * d) * Interval::fromInt(h3, prec);
    return (num / zeta2dSqrt(d, prec)).pow(ratI(Rat(1, 4 * d), prec));
}

Interval phi3(int d, int prec) {
    Interval a = Interval::fromInt(27L, prec).pow(ratI(Rat(1, 4 * d), prec));
    Interval b = (Interval::fromInt(16L, prec) * Interval::pi(prec).powInt(5))
                     .pow(ratI(Rat(1, 4), prec));
    return a * b;
}

Interval frakP(int d, const Int& Dk, const Int& h3, int prec) {
    Interval num = Interval::fromInt(Int(1) << (4 * d), prec) *
                   Interval::pi(prec).powInt(5 * d) * Interval::fromInt(h3, prec);
    Interval den = zeta2dSqrt(d, prec) * Interval::fromInt(Dk, prec).powInt(4);
    return (num / den).pow(ratI(Rat(2, 5), prec));
}

Interval fDelta(const Rat& delta, int d, int prec) {
    if (delta <= 0 || delta > 2) fail(Err::Domain, "fDelta requires 0 < delta <= 2");
    Interval first =
        ratI(delta * (1 + delta) / Rat(17, 12500), prec).pow(ratI(Rat(1) / ((3 - delta) * d), prec));
    Interval core = gammaZetaCore(delta, prec) * ratI(Rat(-57, 100), prec).exp();
    return first * core.pow(ratI(Rat(1) / (3 - delta), prec));
}

Interval boundKQ(const Rat& delta, int prec) {
    if (delta <= 0 || delta > 2) fail(Err::Domain, "boundKQ requires 0 < delta <= 2");
    Interval pi = Interval::pi(prec);
    Interval d1 = ratI(1 + delta, prec);
    Interval num = Interval::fromInt(400L, prec) * pi.powInt(4) * ratI(delta * (1 + delta), prec) *
                   d1.gamma() * d1.zeta().powInt(2);
    Interval den = (Interval::fromInt(2L, prec) * pi).pow(ratI(delta, prec)) *
                   ratI(Rat(1, 10), prec).exp() * Interval::fromInt(2L, prec).zeta().sqrt();
    return (num / den).pow(ratI(Rat(2) / (4 - delta), prec));
}

Interval discCutN3(const Int& n3, int prec) {
    Interval num = Interval::fromInt(96L, prec) * Interval::pi(prec).powInt(3) *
                   Interval::fromInt(n3, prec) * Interval::fromInt(3L, prec).zeta();
    return num.pow(ratI(Rat(2, 5), prec));
}

Interval xi(int d, const Interval& Dl, const Rat& rOverW, const Rat& delta, int prec) {
    Interval first = (ratI(rOverW, prec) * zeta2dSqrt(d, prec) / ratI(delta * (delta + 1), prec))
                         .pow(ratI(Rat(1, d), prec));
    Interval pi = Interval::pi(prec);
    Interval d1 = ratI(1 + delta, prec);
    Interval twoPi = Interval::fromInt(2L, prec) * pi;
    Interval second = twoPi.pow(ratI(1 + delta, prec)) /
                      (Interval::fromInt(16L, prec) * pi.powInt(5) * d1.gamma() * d1.zeta().powInt(2));
    Interval rootDisc = Dl.pow(ratI(Rat(1, 2 * d), prec));
    return first * second * rootDisc.pow(ratI(4 - delta, prec));
}

Interval remakR(const Interval& Dk, int wl, int prec) {
    // d = 3, gamma_2 = 2/sqrt(3): (2/w)((log Dk - 3 log 3)/4)^2
    Interval logterm = Dk.log() - Interval::fromInt(3L, prec) * Interval::fromInt(3L, prec).log();
    Interval sq = (logterm / Interval::fromInt(4L, prec)).powInt(2);
    return ratI(Rat(2, wl), prec) * sq;
}

Interval odlyzkoB(const Interval& x) {
    int prec = x.prec();
    Interval twelve = Interval::fromInt(12L, prec);
    Interval five = Interval::fromInt(5L, prec);
    return (five + (twelve * x * x - five).sqrt()) / Interval::fromInt(6L, prec);
}

Interval odlyzkoAlpha(int prec) {
    Interval n = Interval::fromInt(14L, prec) - Interval::fromInt(128L, prec).sqrt();
    return (n / Interval::fromInt(34L, prec)).sqrt();
}

Interval odlyzkoX0(int prec) {
    Interval a = odlyzkoAlpha(prec);
    Interval num = a + (Interval::fromInt(2L, prec) -
                        Interval::fromInt(5L, prec) * a.powInt(2)).sqrt();
    Interval den = Interval::fromInt(2L, prec) *
                   (one(prec) - Interval::fromInt(3L, prec) * a.powInt(2));
    return num / den;
}

Interval odlyzkoG(const Interval& x, int d) {
    int prec = x.prec();
    if (!Interval::fromInt(1L, prec).certainlyLess(x))
        fail(Err::Domain, "odlyzkoG requires x > 1");
    Interval b = odlyzkoB(x);
    Interval alphaX = one(prec) + odlyzkoAlpha(prec) * x;
    if (mpfr_cmp(b.lo(), alphaX.hi()) < 0)
        fail(Err::Domain, "odlyzkoG domain: cannot certify b(x) >= 1 + alpha x");
    Interval two = Interval::fromInt(2L, prec);
    Interval twoXm1 = two * x - one(prec);
    Interval inner = Interval::pi(prec).log() - digamma(x / two) +
                     twoXm1 / Interval::fromInt(4L, prec) * trigamma(b / two);
    Interval corr = -(two / x) - two / (x - one(prec)) - twoXm1 / b.powInt(2) -
                    twoXm1 / (b - one(prec)).powInt(2);
    return (inner + corr / Interval::fromInt((long)d, prec)).exp();
}

std::vector<Rat> defaultXGrid() {
    std::vector<Rat> g;
    for (int i = 1020; i <= 3000; i += 5) g.push_back(Rat(i, 1000));
    g.push_back(Rat(143, 100));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

Interval frakN(int d, const std::vector<Rat>& xGrid, int prec) {
    Interval x0 = odlyzkoX0(prec);
    bool any = false;
    Interval best(prec);
    for (const Rat& xq : xGrid) {
        Interval x = ratI(xq, prec);
        if (!x0.certainlyLess(x)) continue;   // demand x > x0 certifiably
        Interval g = odlyzkoG(x, d);
        best = any ? Interval::max(best, g) : g;
        any = true;
    }
    if (!any) fail(Err::Domain, "frakN: empty admissible grid");
    return best;
}

std::vector<Rat> defaultDeltaGrid() {
    std::vector<Rat> g;
    for (int i = 1; i <= 200; ++i) g.push_back(Rat(i, 100));
    // hand-picked checkpoints reproduced exactly
    for (auto q : {Rat(34, 100), Rat(9, 10), Rat(77, 100), Rat(75, 100), Rat(71, 100),
                   Rat(7, 10), Rat(72, 100), Rat(69, 100), Rat(52, 100), Rat(65, 100),
                   Rat(66, 100), Rat(8, 10)})
        g.push_back(q);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::pair<Rat, Interval> minimizeOverDelta(const std::function<Interval(const Rat&)>& fn,
                                           const std::vector<Rat>& grid) {
    if (grid.empty()) fail(Err::Domain, "minimizeOverDelta: empty grid");
    bool have = false;
    Rat argmin;
    Interval best;
    Rat bestMid;
    for (const Rat& dq : grid) {
        Interval v = fn(dq);
        Rat mid = v.midRat();
        if (!have || mid < bestMid) {
            have = true;
            argmin = dq;
            best = v;
            bestMid = mid;
        }
    }
    return {argmin, best};
}

} // namespace fpp
