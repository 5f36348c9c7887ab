#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fpp/interval.hpp"
#include "fpp/rational.hpp"

namespace fpp {

// digamma / trigamma with certified error: recurrence shift above 20, then
// the Stirling-type series with the first omitted term as remainder bound
Interval digamma(const Interval& x);
Interval trigamma(const Interval& x);

enum class RegulatorKind { Zimmert, Slavutskii };

// R_l / w_l lower bounds: 0.02 e^(0.1 d) and 0.00136 e^(0.57 d)
Interval regulatorLB(RegulatorKind kind, int d, int prec);

// s(s-1) Gamma(s)^d ((2 pi)^(-2d) Dl)^(s/2) zeta_l(s), per unit w_l
Interval brauerSiegelRHS(const Rat& s, int d, const Int& Dl, const Interval& zetaLs);

Interval phi1(int d, const Rat& rOverW, const Rat& delta, int prec);
Interval phi2(int d, const Int& h3, int prec);
Interval phi3(int d, int prec);                       // 27^(1/4d) (16 pi^5)^(1/4)
Interval frakP(int d, const Int& Dk, const Int& h3, int prec);
Interval fDelta(const Rat& delta, int d, int prec);
Interval boundKQ(const Rat& delta, int prec);         // base-Q discriminant bound
Interval discCutN3(const Int& n3, int prec);          // (2^5 3 pi^3 n3 zeta(3))^(2/5)
Interval xi(int d, const Interval& Dl, const Rat& rOverW, const Rat& delta, int prec);
Interval remakR(const Interval& Dk, int wl, int prec);

Interval odlyzkoB(const Interval& x);
Interval odlyzkoG(const Interval& x, int d);
Interval odlyzkoAlpha(int prec);
Interval odlyzkoX0(int prec);

// lower bound for the totally real root-discriminant floor: max of g over the
// grid points >= x0
Interval frakN(int d, const std::vector<Rat>& xGrid, int prec);
std::vector<Rat> defaultXGrid();

std::vector<Rat> defaultDeltaGrid();

// grid argmin by interval midpoint, ties toward smaller delta
std::pair<Rat, Interval> minimizeOverDelta(const std::function<Interval(const Rat&)>& fn,
                                           const std::vector<Rat>& grid);

struct BoundProfile {
    int d = 0;
    Int h3;
    Rat rOverW;
    std::vector<Rat> deltaGrid;
    std::map<std::string, Interval> results;
};

} // namespace fpp
