#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "fpp/rational.hpp"

namespace fpp {

// Closed interval [lo, hi] in MPFR floats with outward rounding.  Every
// operation returns an enclosure of the exact image; precision is carried
// per value and binary operations work at the max of the operand precisions.
class Interval {
public:
    explicit Interval(int precBits = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval fromRat(const Rat& q, int prec);
    static Interval fromInt(const Int& n, int prec);
    static Interval fromInt(long n, int prec);
    static Interval fromEndpoints(const Rat& lo, const Rat& hi, int prec);
    static Interval pi(int prec);

    int prec() const { return prec_; }
    // exact rational endpoints (MPFR values are dyadic rationals)
    Rat loRat() const;
    Rat hiRat() const;
    Rat midRat() const;
    Rat radRat() const;
    double midDouble() const;
    double radDouble() const;

    bool contains(const Rat& q) const;
    bool containsZero() const;
    // whole interval strictly on one side of q
    bool certainlyLess(const Rat& q) const;
    bool certainlyGreater(const Rat& q) const;
    bool certainlyLess(const Interval& o) const;   // hi < o.lo

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval operator-() const;

    Interval addRat(const Rat& q) const { return *this + fromRat(q, prec_); }
    Interval mulRat(const Rat& q) const { return *this * fromRat(q, prec_); }

    Interval sqrt() const;            // requires lo >= 0
    Interval exp() const;
    Interval log() const;             // requires lo > 0
    Interval powInt(long e) const;    // integer power
    Interval pow(const Interval& e) const;  // requires lo > 0
    Interval inv() const;
    Interval abs() const;

    // Riemann zeta, argument interval must lie in (1, inf)
    Interval zeta() const;
    // Gamma, argument interval must lie in (0, inf)
    Interval gamma() const;

    static Interval hull(const Interval& a, const Interval& b);
    static Interval max(const Interval& a, const Interval& b);

    // widen so the new interval contains [lo, hi*factor] with factor >= 1
    Interval mulUpperBy(const Interval& factor) const;

    // decimal strings, rounded outward
    std::string loStr(int digits = 20) const;
    std::string hiStr(int digits = 20) const;
    std::string str(int digits = 20) const;

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    mpfr_t& loRef() { return lo_; }
    mpfr_t& hiRef() { return hi_; }
    void assertValid(const char* where) const;

private:
    mpfr_t lo_, hi_;
    int prec_;
};

} // namespace fpp
