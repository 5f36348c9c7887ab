#include "fpp/ffpoly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "fpp/datasets.hpp"
#include "fpp/errors.hpp"

namespace fpp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Fp = std::vector<u64>;   // ascending coefficients, normalized

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

void normalize(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Fp& f) { return (int)f.size() - 1; }

Fp mul(const Fp& a, const Fp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    }
    normalize(r);
    return r;
}

// remainder of a mod m (m nonzero)
Fp rem(Fp a, const Fp& m, u64 p) {
    int dm = deg(m);
    u64 inv = invmod(m.back(), p);
    while (deg(a) >= dm) {
        u64 c = mulmod(a.back(), inv, p);
        int shift = deg(a) - dm;
        for (int i = 0; i <= dm; ++i) {
            u64 s = mulmod(c, m[i], p);
            u64& t = a[i + shift];
            t = (t >= s) ? t - s : t + p - s;
        }
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

Fp mulmodPoly(const Fp& a, const Fp& b, const Fp& m, u64 p) {
    return rem(mul(a, b, p), m, p);
}

Fp gcdPoly(Fp a, Fp b, u64 p) {
    while (!b.empty()) {
        Fp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

Fp derivative(const Fp& f, u64 p) {
    Fp d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back((u64)((u128)f[i] * (i % p) % p));
    normalize(d);
    return d;
}

// x^(p) mod m via binary exponentiation of x
Fp frobeniusOfX(const Fp& m, u64 p) {
    Fp x = {0, 1};
    if (deg(m) == 1) return rem(x, m, p);
    Fp base = rem(x, m, p);
    Fp r = {1};
    u64 e = p;
    while (e) {
        if (e & 1) r = mulmodPoly(r, base, m, p);
        base = mulmodPoly(base, base, m, p);
        e >>= 1;
    }
    return r;
}

// g(h) mod m, Horner
Fp compose(const Fp& g, const Fp& h, const Fp& m, u64 p) {
    Fp r;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        r = mulmodPoly(r, h, m, p);
        if (*it) {
            if (r.empty()) r.push_back(*it);
            else r[0] = (r[0] + *it) % p;
        }
        normalize(r);
    }
    return r;
}

Fp sub(Fp a, const Fp& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] >= b[i]) ? a[i] - b[i] : a[i] + p - b[i];
    normalize(a);
    return a;
}

Fp quo(Fp a, const Fp& m, u64 p) {
    int dm = deg(m);
    if (deg(a) < dm) return {};
    Fp q(deg(a) - dm + 1, 0);
    u64 inv = invmod(m.back(), p);
    while (deg(a) >= dm) {
        u64 c = mulmod(a.back(), inv, p);
        int shift = deg(a) - dm;
        q[shift] = c;
        for (int i = 0; i <= dm; ++i) {
            u64 s = mulmod(c, m[i], p);
            u64& t = a[i + shift];
            t = (t >= s) ? t - s : t + p - s;
        }
        normalize(a);
        if (a.empty()) break;
    }
    return q;
}

} // namespace

PrimeFieldPoly reduceModP(const std::vector<Int>& coeffs, std::uint64_t p) {
    PrimeFieldPoly r;
    r.p = p;
    for (const Int& c : coeffs) {
        Int m = c % Int((unsigned long)p);
        if (m < 0) m += Int((unsigned long)p);
        r.coeffs.push_back(m.get_ui());
    }
    while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
    return r;
}

std::map<int, int> ddfDegreeMultiset(const PrimeFieldPoly& poly) {
    u64 p = poly.p;
    Fp f = poly.coeffs;
    if (f.empty() || deg(f) < 1) fail(Err::Domain, "ddf: degree must be >= 1");
    // make monic
    if (f.back() != 1) {
        u64 inv = invmod(f.back(), p);
        for (auto& c : f) c = mulmod(c, inv, p);
    }
    Fp d = derivative(f, p);
    Fp g = d.empty() ? f : gcdPoly(f, d, p);
    if (deg(g) != 0)
        fail(Err::NonSquarefree, "ddf requires squarefree input mod " + std::to_string(p));

    std::map<int, int> out;
    Fp rest = f;
    Fp xp = frobeniusOfX(rest, p);   // x^p mod rest
    Fp frob = xp;                    // x^(p^i) mod rest
    for (int i = 1; deg(rest) >= 1 && 2 * i <= deg(rest); ++i) {
        Fp diff = sub(frob, Fp{0, 1}, p);
        Fp gi = diff.empty() ? rest : gcdPoly(rest, diff, p);
        if (deg(gi) > 0) {
            if (deg(gi) % i != 0) fail(Err::Domain, "ddf internal degree mismatch");
            out[i] += deg(gi) / i;
            rest = quo(rest, gi, p);
            if (deg(rest) == 0) return out;
            xp = rem(xp, rest, p);
            frob = rem(frob, rest, p);
        }
        if (2 * (i + 1) <= deg(rest)) frob = compose(frob, xp, rest, p);
    }
    if (deg(rest) >= 1) out[deg(rest)] += 1;
    return out;
}

namespace {

std::vector<PlaceOverP> patternFromDdf(const std::map<int, int>& dd) {
    std::vector<PlaceOverP> v;
    for (auto& [f, count] : dd)
        for (int i = 0; i < count; ++i) v.push_back({1, f});
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
        return std::tie(a.e, a.f) > std::tie(b.e, b.f);
    });
    return v;
}

} // namespace

SplittingPattern splittingPattern(const NumberFieldRecord& field, std::uint64_t p) {
    SplittingPattern sp;
    sp.p = p;
    Int pz((unsigned long)p);
    if (field.polyDisc % pz == 0 || field.absDisc % pz == 0) {
        const RamifiedPrimeDecomposition* dec = field.bundledDecomposition(pz);
        if (!dec)
            fail(Err::MissingDatum, "no bundled decomposition for prime " +
                                        pz.get_str() + " in field " + field.label);
        for (auto& [e, f] : dec->factors) sp.places.push_back({e, f});
        sp.source = PatternSource::Bundled;
        return sp;
    }
    if (field.degree == 1) {
        sp.places.push_back({1, 1});
        return sp;
    }
    auto dd = ddfDegreeMultiset(reduceModP(field.poly, p));
    sp.places = patternFromDdf(dd);
    return sp;
}

RelativePlaceClass kroneckerClass(std::uint64_t a, std::uint64_t p) {
    Int D = (a % 4 == 3) ? Int((unsigned long)a) : 4 * Int((unsigned long)a);
    Int pz((unsigned long)p);
    if (D % pz == 0) return RelativePlaceClass::RamifiedInL;
    int k = kronecker(-D, pz);
    return k == 1 ? RelativePlaceClass::SplitInL : RelativePlaceClass::InertInL;
}

const char* relativeClassName(RelativePlaceClass c) {
    switch (c) {
        case RelativePlaceClass::SplitInL: return "split";
        case RelativePlaceClass::InertInL: return "inert";
        case RelativePlaceClass::RamifiedInL: return "ramified";
    }
    return "?";
}

std::vector<PlaceOfK> placesOverP(const NumberFieldRecord& field, std::uint64_t p) {
    SplittingPattern sp = splittingPattern(field, p);
    std::vector<PlaceOfK> out;
    std::map<std::pair<int, int>, int> tags;
    for (auto& pl : sp.places) {
        PlaceOfK v;
        v.p = p;
        v.e = pl.e;
        v.f = pl.f;
        v.q = intPow(Int((unsigned long)p), pl.f);
        v.multiplicityTag = tags[{pl.e, pl.f}]++;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const PlaceOfK& a, const PlaceOfK& b) {
        return std::tie(a.p, a.f, a.e, a.multiplicityTag) <
               std::tie(b.p, b.f, b.e, b.multiplicityTag);
    });
    return out;
}

std::vector<PlaceOfK> placesUpToNorm(const NumberFieldRecord& field, const Int& bound) {
    if (bound < 2) fail(Err::Domain, "placesUpToNorm: bound must be >= 2");
    std::vector<PlaceOfK> out;
    if (bound >= Int(1) << 40) fail(Err::Domain, "placesUpToNorm: bound too large");
    for (u64 p : primesUpTo(bound.get_ui())) {
        for (auto& v : placesOverP(field, p))
            if (v.q <= bound) out.push_back(v);
    }
    return out;
}

namespace {

using Pat = std::vector<std::pair<int, int>>;   // (e, f) multiset, sorted desc

Pat toPat(const SplittingPattern& sp) {
    Pat v;
    for (auto& pl : sp.places) v.push_back({pl.e, pl.f});
    std::sort(v.rbegin(), v.rend());
    return v;
}

// Enumerate all assignments of a class to each k-place over p such that the
// induced multiset of ell-places equals ellPat.  Calls sink(classes).
void matchings(const Pat& kPat, const Pat& ellPat,
               const std::function<void(const std::vector<RelativePlaceClass>&)>& sink) {
    size_t n = kPat.size();
    std::vector<RelativePlaceClass> cls(n);
    std::function<void(size_t, std::multiset<std::pair<int, int>>&)> rec =
        [&](size_t i, std::multiset<std::pair<int, int>>& remaining) {
            if (i == n) {
                if (remaining.empty()) sink(cls);
                return;
            }
            auto [e, f] = kPat[i];
            auto tryTake = [&](RelativePlaceClass c, std::vector<std::pair<int, int>> need) {
                for (auto& x : need)
                    if (remaining.find(x) == remaining.end()) return;
                // multiset removal with duplicates done carefully
                std::multiset<std::pair<int, int>> saved = remaining;
                bool ok = true;
                for (auto& x : need) {
                    auto it = remaining.find(x);
                    if (it == remaining.end()) { ok = false; break; }
                    remaining.erase(it);
                }
                if (ok) {
                    cls[i] = c;
                    rec(i + 1, remaining);
                }
                remaining = saved;
            };
            tryTake(RelativePlaceClass::SplitInL, {{e, f}, {e, f}});
            tryTake(RelativePlaceClass::InertInL, {{e, 2 * f}});
            tryTake(RelativePlaceClass::RamifiedInL, {{2 * e, f}});
        };
    std::multiset<std::pair<int, int>> rem(ellPat.begin(), ellPat.end());
    rec(0, rem);
}

} // namespace

RelativePlaceClass relativeClass(const FieldPairRecord& pair, const PlaceOfK& place) {
    u64 p = place.p;
    Pat kPat = toPat(splittingPattern(*pair.k, p));
    Pat ellPat = toPat(splittingPattern(*pair.ell, p));

    // locate the queried place's index among kPat entries (same canonical order)
    auto kps = placesOverP(*pair.k, p);
    int idx = -1;
    for (size_t i = 0; i < kps.size(); ++i)
        if (kps[i].e == place.e && kps[i].f == place.f &&
            kps[i].multiplicityTag == place.multiplicityTag)
            idx = (int)i;
    if (idx < 0) fail(Err::Domain, "relativeClass: place does not belong to pair.k");

    // kPat must be aligned with kps ordering: rebuild in that order
    Pat kOrdered;
    for (auto& v : kps) kOrdered.push_back({v.e, v.f});

    std::set<RelativePlaceClass> answers;
    int count = 0;
    matchings(kOrdered, ellPat, [&](const std::vector<RelativePlaceClass>& cls) {
        answers.insert(cls[idx]);
        ++count;
    });
    if (count == 0)
        fail(Err::Invariant, "relativeClass: no consistent matching for p=" +
                                 std::to_string(p) + " in pair " + pair.label);
    if (answers.size() > 1)
        fail(Err::AmbiguousAttribution,
             "relativeClass: ambiguous class for place over " + std::to_string(p) +
                 " in pair " + pair.label);
    return *answers.begin();
}

int ramifiedPlaceCountOverP(const FieldPairRecord& pair, std::uint64_t p) {
    auto kps = placesOverP(*pair.k, p);
    Pat kOrdered;
    for (auto& v : kps) kOrdered.push_back({v.e, v.f});
    Pat ellPat = toPat(splittingPattern(*pair.ell, p));
    std::set<int> counts;
    matchings(kOrdered, ellPat, [&](const std::vector<RelativePlaceClass>& cls) {
        int c = 0;
        for (auto x : cls)
            if (x == RelativePlaceClass::RamifiedInL) ++c;
        counts.insert(c);
    });
    if (counts.empty())
        fail(Err::Invariant, "ramifiedPlaceCountOverP: no matching, p=" + std::to_string(p));
    if (counts.size() > 1)
        fail(Err::AmbiguousAttribution, "ramifiedPlaceCountOverP: count ambiguous");
    return *counts.begin();
}

int ramifiedPlaceCount(const FieldPairRecord& pair) {
    // places of k ramifying in ell lie over primes dividing relDiscNorm
    int total = 0;
    Int n = pair.relDiscNorm;
    std::set<u64> primes;
    Int d(2);
    Int m = n;
    while (m > 1 && d * d <= m) {
        while (m % d == 0) {
            primes.insert(d.get_ui());
            m /= d;
        }
        d += 1;
    }
    if (m > 1) primes.insert(m.get_ui());
    for (u64 p : primes) total += ramifiedPlaceCountOverP(pair, p);
    return total;
}

std::vector<std::uint64_t> primesUpTo(std::uint64_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<u64> out;
    for (u64 i = 2; i <= n; ++i) {
        if (sieve[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
        }
    }
    return out;
}

} // namespace fpp
