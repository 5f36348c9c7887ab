#include "fpp/rational.hpp"

#include "fpp/errors.hpp"

namespace fpp {

Rat ratFromString(const std::string& s) {
    if (s.empty()) fail(Err::Parse, "empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        fail(Err::Parse, "bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string ratToString(const Rat& q) {
    return q.get_str();
}

Int intPow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

bool isPowerOfThree(const Int& n) {
    if (n <= 0) return false;
    Int m = n;
    while (m % 3 == 0) m /= 3;
    return m == 1;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// simplest rational in [lo, hi], both finite, lo <= hi
Rat simplest(const Rat& lo, const Rat& hi) {
    Int fl;
    mpz_cdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (Rat(fl) <= hi) {
        // an integer lies in the interval; the smallest-in-magnitude one wins
        if (lo <= 0 && hi >= 0) return Rat(0);
        if (lo > 0) return Rat(fl);
        Int fh;
        mpz_fdiv_q(fh.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        return Rat(fh);
    }
    // no integer inside; recurse on the fractional part
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Rat s = simplest(1 / (hi - Rat(a)), 1 / (lo - Rat(a)));
    return Rat(a) + 1 / s;
}

} // namespace

Rat simplestRationalIn(const Rat& lo, const Rat& hi) {
    if (lo > hi) fail(Err::Domain, "empty interval in simplestRationalIn");
    return simplest(lo, hi);
}

namespace {

// Farey neighbours of p/q (reduced) at order qmax, i.e. the closest rationals
// with denominator <= qmax on either side.
std::pair<Rat, Rat> fareyNeighbours(const Rat& r, const Int& qmax) {
    Int p = r.get_num(), q = r.get_den();
    if (q > qmax) fail(Err::Domain, "fareyNeighbours: denominator exceeds order");
    if (q == 1) return {r - Rat(1, qmax), r + Rat(1, qmax)};
    Int pinv;
    mpz_invert(pinv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // right neighbour p'/q': p'q - pq' = 1, q' = qmax - ((qmax + pinv) mod q)
    Int qr = qmax - ((qmax + pinv) % q);
    Int pr = (1 + p * qr) / q;
    // left neighbour: p q' - p' q = 1, q' = qmax - ((qmax - pinv) mod q)
    Int ql = qmax - ((qmax - pinv) % q);
    Int pl = (p * ql - 1) / q;
    return {Rat(pl, ql), Rat(pr, qr)};
}

} // namespace

Rat uniqueRationalIn(const Rat& lo, const Rat& hi, const Int& qmax) {
    Rat best = simplestRationalIn(lo, hi);
    if (best.get_den() > qmax)
        fail(Err::NoCandidate, "no rational with denominator <= " + qmax.get_str() +
                                   " in [" + lo.get_str() + ", " + hi.get_str() + "]");
    auto [left, right] = fareyNeighbours(best, qmax);
    if (left >= lo || right <= hi)
        fail(Err::MultipleCandidates, "several denominator-<=" + qmax.get_str() +
                                          " rationals inside the interval");
    return best;
}

} // namespace fpp
