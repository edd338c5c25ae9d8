#include "rosen/interval.hpp"

#include <algorithm>

#include "rosen/errors.hpp"

namespace rosen {

Interval::Interval(long prec) : prec_(std::max<long>(prec, 16))
{
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_)
{
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_)
{
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, 16);
    mpfr_init2(o.hi_, 16);
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

Interval& Interval::operator=(const Interval& o)
{
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept
{
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rat(const Rat& r, long prec)
{
    Interval x(prec);
    mpfr_set_q(x.lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, r.get_mpq_t(), MPFR_RNDU);
    return x;
}

Interval Interval::from_long(long v, long prec)
{
    Interval x(prec);
    mpfr_set_si(x.lo_, v, MPFR_RNDD);
    mpfr_set_si(x.hi_, v, MPFR_RNDU);
    return x;
}

Interval Interval::from_endpoints(const Rat& lo, const Rat& hi, long prec)
{
    if (lo > hi) throw parameter_error("interval endpoints out of order");
    Interval x(prec);
    mpfr_set_q(x.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return x;
}

Interval Interval::two_cos_pi_over(int q, long prec)
{
    if (q < 3) throw parameter_error("q must be >= 3");
    Interval x(prec);
    mpfr_t pi_lo, pi_hi;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(pi_hi, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_div_si(pi_lo, pi_lo, q, MPFR_RNDD);
    mpfr_div_si(pi_hi, pi_hi, q, MPFR_RNDU);
    // cos decreases on [0, pi/3] so the bounds swap
    mpfr_cos(x.lo_, pi_hi, MPFR_RNDD);
    mpfr_cos(x.hi_, pi_lo, MPFR_RNDU);
    mpfr_mul_2si(x.lo_, x.lo_, 1, MPFR_RNDD);
    mpfr_mul_2si(x.hi_, x.hi_, 1, MPFR_RNDU);
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
    return x;
}

bool Interval::is_exact_zero() const
{
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool Interval::contains_zero() const
{
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

std::optional<int> Interval::sign() const
{
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (is_exact_zero()) return 0;
    return std::nullopt;
}

bool Interval::definitely_less(const Interval& o) const
{
    return mpfr_cmp(hi_, o.lo_) < 0;
}

Interval Interval::operator-() const
{
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b)
{
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b)
{
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) throw precision_error("interval division by an interval containing zero");
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::recip() const
{
    return from_long(1, prec_) / *this;
}

Interval Interval::abs() const
{
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        r = *this;
    } else if (mpfr_sgn(hi_) <= 0) {
        r = -*this;
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t m;
        mpfr_init2(m, prec_);
        mpfr_neg(m, lo_, MPFR_RNDU);
        if (mpfr_cmp(m, hi_) > 0)
            mpfr_set(r.hi_, m, MPFR_RNDU);
        else
            mpfr_set(r.hi_, hi_, MPFR_RNDU);
        mpfr_clear(m);
    }
    return r;
}

Interval Interval::sqrt(const Interval& a)
{
    if (mpfr_sgn(a.hi_) < 0) throw arithmetic_error("sqrt of a negative interval");
    Interval r(a.prec_);
    if (mpfr_sgn(a.lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

std::pair<Int, Int> Interval::floor_range() const
{
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, lo_, MPFR_RNDD);
    Int flo(z);
    mpfr_get_z(z, hi_, MPFR_RNDD);
    Int fhi(z);
    mpz_clear(z);
    return {flo, fhi};
}

bool Interval::rel_radius_leq(long bits) const
{
    if (contains_zero()) return is_exact_zero();
    mpfr_t w, m;
    mpfr_init2(w, prec_);
    mpfr_init2(m, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_mul_2si(w, w, bits, MPFR_RNDU);
    if (mpfr_sgn(lo_) > 0)
        mpfr_set(m, lo_, MPFR_RNDD);
    else
        mpfr_neg(m, hi_, MPFR_RNDD);
    bool ok = mpfr_cmp(w, m) <= 0;
    mpfr_clear(w);
    mpfr_clear(m);
    return ok;
}

bool Interval::abs_radius_leq(long bits) const
{
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_mul_2si(w, w, bits, MPFR_RNDU);
    bool ok = mpfr_cmp_ui(w, 1) <= 0;
    mpfr_clear(w);
    return ok;
}

double Interval::to_double() const
{
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

static Rat mpfr_to_rat(mpfr_srcptr x)
{
    if (mpfr_zero_p(x)) return Rat(0);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat r(q);
    mpq_clear(q);
    return r;
}

Rat Interval::lo_rat() const { return mpfr_to_rat(lo_); }
Rat Interval::hi_rat() const { return mpfr_to_rat(hi_); }

Rat Interval::mid_rat() const
{
    return (lo_rat() + hi_rat()) / 2;
}

std::string Interval::decimal(int digits) const
{
    return rat_decimal(mid_rat(), digits);
}

} // namespace rosen
