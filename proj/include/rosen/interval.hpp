#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "rosen/rational.hpp"

namespace rosen {

// Closed interval [lo, hi] with mpfr endpoints, all operations outward
// rounded, so the true value of any expression stays enclosed.  This is the
// "high-precision ball" kernel of the spec.
class Interval {
public:
    explicit Interval(long prec = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rat(const Rat& r, long prec);
    static Interval from_long(long v, long prec);
    // enclosure [lo, hi] of an exact pair of rationals, lo <= hi
    static Interval from_endpoints(const Rat& lo, const Rat& hi, long prec);
    // pi/q based enclosure of 2cos(pi/q)
    static Interval two_cos_pi_over(int q, long prec);

    long precision() const { return prec_; }

    bool is_exact_zero() const;
    bool contains_zero() const;
    // definite sign of every point of the interval, or nullopt on straddle
    std::optional<int> sign() const;
    // hi < o.lo, certified
    bool definitely_less(const Interval& o) const;
    bool definitely_greater(const Interval& o) const { return o.definitely_less(*this); }

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b); // b must exclude 0
    Interval recip() const;                                          // must exclude 0
    Interval abs() const;
    static Interval sqrt(const Interval& a); // requires hi >= 0; lo clamped at 0

    // floor(lo), floor(hi): equal iff the floor of the enclosed value is certain
    std::pair<Int, Int> floor_range() const;

    // certified relative radius <= 2^-bits (requires sign-definite interval)
    bool rel_radius_leq(long bits) const;
    // |hi - lo| <= 2^-bits
    bool abs_radius_leq(long bits) const;

    double to_double() const;
    Rat lo_rat() const;
    Rat hi_rat() const;
    Rat mid_rat() const;
    std::string decimal(int digits) const;

private:
    mpfr_t lo_, hi_;
    long prec_;
};

} // namespace rosen
