#include "fpp/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "fpp/errors.hpp"

namespace fpp {

Interval::Interval(int precBits) : prec_(precBits) {
    mpfr_init2(lo_, precBits);
    mpfr_init2(hi_, precBits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::assertValid(const char* where) const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        fail(Err::Domain, std::string("invalid interval in ") + where);
}

Interval Interval::fromRat(const Rat& q, int prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::fromInt(const Int& n, int prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::fromInt(long n, int prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, n, MPFR_RNDD);
    mpfr_set_si(r.hi_, n, MPFR_RNDU);
    return r;
}

Interval Interval::fromEndpoints(const Rat& lo, const Rat& hi, int prec) {
    if (lo > hi) fail(Err::Domain, "fromEndpoints: lo > hi");
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(int prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

namespace {
Rat mpfrToRat(const mpfr_t& x) {
    if (mpfr_zero_p(x)) return Rat(0);
    if (!mpfr_number_p(x)) fail(Err::Domain, "non-finite endpoint");
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat r(m);
    Rat two(2);
    if (e >= 0) {
        r *= Rat(intPow(Int(2), (unsigned long)e));
    } else {
        r /= Rat(intPow(Int(2), (unsigned long)(-e)));
    }
    return r;
}
} // namespace

Rat Interval::loRat() const { return mpfrToRat(lo_); }
Rat Interval::hiRat() const { return mpfrToRat(hi_); }
Rat Interval::midRat() const { return (loRat() + hiRat()) / 2; }
Rat Interval::radRat() const { return (hiRat() - loRat()) / 2; }
double Interval::midDouble() const { return midRat().get_d(); }
double Interval::radDouble() const { return radRat().get_d(); }

bool Interval::contains(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::containsZero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::certainlyLess(const Rat& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool Interval::certainlyGreater(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool Interval::certainlyLess(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_t* as[2] = {&lo_, &hi_};
    const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t, *a, *b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *a, *b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::inv() const {
    if (containsZero()) fail(Err::Domain, "interval division by zero");
    Interval r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    return *this * o.inv();
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_abs(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) fail(Err::Domain, "sqrt of interval with negative part");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) fail(Err::Domain, "log of non-positive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::powInt(long e) const {
    if (e == 0) return fromInt(1L, prec_);
    if (e < 0) return powInt(-e).inv();
    // even powers of sign-mixed intervals need the abs hull
    Interval base = (e % 2 == 0) ? abs() : *this;
    Interval r(prec_);
    mpfr_pow_si(r.lo_, base.lo_, e, MPFR_RNDD);
    mpfr_pow_si(r.hi_, base.hi_, e, MPFR_RNDU);
    if (e % 2 == 0 && containsZero()) mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmp(r.lo_, r.hi_) > 0) mpfr_swap(r.lo_, r.hi_);
    return r;
}

Interval Interval::pow(const Interval& e) const {
    // exact on monotone pieces via exp(e * log(base)); base must be > 0
    return (e * log()).exp();
}

Interval Interval::zeta() const {
    if (mpfr_cmp_ui(lo_, 1) <= 0) fail(Err::Domain, "zeta requires argument > 1");
    Interval r(prec_);
    // zeta is strictly decreasing on (1, inf)
    mpfr_zeta(r.lo_, hi_, MPFR_RNDD);
    mpfr_zeta(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::gamma() const {
    if (mpfr_sgn(lo_) <= 0) fail(Err::Domain, "gamma requires positive argument");
    Interval r(prec_);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_gamma(a, lo_, MPFR_RNDD);
    mpfr_gamma(b, hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    mpfr_gamma(a, lo_, MPFR_RNDU);
    mpfr_gamma(b, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    // Gamma dips to ~0.8856 at x*=1.4616...; if the interval straddles the
    // minimum the endpoint hull misses it
    if (mpfr_cmp_d(lo_, 1.4616321449683622) < 0 && mpfr_cmp_d(hi_, 1.4616321449683624) > 0) {
        if (mpfr_cmp_d(r.lo_, 0.8856031944108886) > 0)
            mpfr_set_d(r.lo_, 0.8856031944108886, MPFR_RNDD);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::mulUpperBy(const Interval& factor) const {
    Interval r(*this);
    mpfr_mul(r.hi_, hi_, factor.hi(), MPFR_RNDU);
    return r;
}

namespace {
std::string fmt(const mpfr_t& x, int digits, mpfr_rnd_t rnd) {
    char buf[256];
    std::string f = "%." + std::to_string(digits) + (rnd == MPFR_RNDD ? "RDe" : "RUe");
    mpfr_snprintf(buf, sizeof buf, f.c_str(), x);
    return buf;
}
} // namespace

std::string Interval::loStr(int digits) const { return fmt(lo_, digits, MPFR_RNDD); }
std::string Interval::hiStr(int digits) const { return fmt(hi_, digits, MPFR_RNDU); }

std::string Interval::str(int digits) const {
    return "[" + loStr(digits) + ", " + hiStr(digits) + "]";
}

} // namespace fpp
