#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rosen/interval.hpp"
#include "rosen/poly.hpp"
#include "rosen/rational.hpp"

namespace rosen {

class FieldContext;
using FieldCtxPtr = std::shared_ptr<const FieldContext>;

// Exact element of K_q = Q(lambda_q) for even q, or Q(lambda_q)(sqrt(Delta))
// with Delta = lambda^2 - 4*lambda + 8 for odd q.  Stored as two coordinate
// vectors in the basis 1, lambda, ..., lambda^(m-1): the rational part and
// the coefficient of sqrt(Delta) (empty for even q).  Elements are immutable
// values; all arithmetic is exact and reduced mod the minimal polynomial.
class FieldElem {
public:
    FieldElem() = default;

    bool valid() const { return ctx_ != nullptr; }
    const FieldCtxPtr& context() const { return ctx_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()
    bool has_surd() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

    FieldElem operator+(const Rat& r) const;
    FieldElem operator-(const Rat& r) const;
    FieldElem operator*(const Rat& r) const;
    FieldElem operator/(const Rat& r) const;
    friend FieldElem operator+(const Rat& r, const FieldElem& a) { return a + r; }
    friend FieldElem operator-(const Rat& r, const FieldElem& a) { return (-a) + r; }
    friend FieldElem operator*(const Rat& r, const FieldElem& a) { return a * r; }

    // Decidable sign: 0 iff the coordinate vectors are zero, otherwise the
    // enclosure is refined (doubling precision up to the context cap) until
    // it excludes zero.  Hitting the cap on a nonzero element throws
    // precision_error: it would mean an untracked algebraic identity.
    int sign() const;
    bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FieldElem& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const FieldElem& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const FieldElem& o) const { return (*this - o).sign() >= 0; }

    // Enclosure of the real value with relative radius <= 2^-bits.
    Interval enclosure(long bits) const;
    double to_double() const { return enclosure(60).to_double(); }
    std::string decimal(int digits) const;

    // floor of the real value, exact (sign tests settle boundary cases)
    Int floor() const;

    // coordinate access (rational part / sqrt(Delta) part)
    const std::vector<Rat>& rational_coords() const { return re_; }
    const std::vector<Rat>& surd_coords() const { return su_; }

    std::string str() const;

private:
    friend class FieldContext;
    friend std::optional<FieldElem> field_sqrt(const FieldElem&);
    FieldElem(FieldCtxPtr ctx, std::vector<Rat> re, std::vector<Rat> su);

    FieldCtxPtr ctx_;
    std::vector<Rat> re_, su_;
};

// Context of K_q: the minimal polynomial of lambda_q = 2cos(pi/q), reduction
// tables, and refinable enclosures of lambda and sqrt(Delta).  Read-only
// after creation; the enclosure cache is mutex-guarded, so contexts can be
// shared across threads.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    // field_setup(q); throws parameter_error for q < 3.  For odd q the
    // constructor certifies that Delta is not a square in Q(lambda) (via the
    // norm, falling back to an exact-verified square-root search), which the
    // coordinate-wise zero test relies on.
    static FieldCtxPtr create(int q);

    int q() const { return q_; }
    bool is_odd() const { return q_ % 2 == 1; }
    int degree() const { return degree_; }
    const QPoly& minpoly() const { return minpoly_; }
    long precision_cap() const { return precision_cap_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_rational(const Rat& r) const;
    FieldElem from_int(long v) const { return from_rational(Rat(v)); }
    // polynomial in lambda, reduced
    FieldElem from_lambda_poly(const QPoly& p) const;
    // rational part + surd part, both as polynomials in lambda
    FieldElem from_parts(const QPoly& re, const QPoly& su) const;

    FieldElem lambda() const;
    FieldElem delta() const;      // odd only: lambda^2 - 4 lambda + 8
    FieldElem sqrt_delta() const; // odd only
    FieldElem rho() const;        // odd only: (lambda - 2 + sqrt(Delta))/2
    FieldElem hurwitz() const;    // 1/2 (even) or rho/(rho^2+1) (odd)

    Interval lambda_enclosure(long bits) const;
    Interval sqrt_delta_enclosure(long bits) const;
    // conjugate embeddings lambda -> 2cos(j*pi/q), j coprime to 2q
    const std::vector<int>& embedding_indices() const { return units_; }
    std::vector<Interval> conjugate_lambdas(long bits) const;

    // coordinate-level helpers in Q(lambda); shared with the element ops
    std::vector<Rat> reduce(std::vector<Rat> conv) const; // degree < 2m-1 -> m
    std::vector<Rat> mul_coords(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    std::vector<Rat> inv_coords(const std::vector<Rat>& a) const; // in Q(lambda)
    const std::vector<Rat>& delta_coords() const { return delta_coords_; }

private:
    FieldContext() = default;
    friend class FieldElem;
    friend std::optional<FieldElem> field_sqrt(const FieldElem&);

    int q_ = 0;
    int degree_ = 0;
    QPoly minpoly_;
    std::vector<std::vector<Rat>> red_rows_; // lambda^(m+j) in the basis
    std::vector<Rat> delta_coords_;
    std::vector<int> units_;
    long precision_cap_ = 1L << 16;

    mutable std::mutex cache_mutex_;
    mutable long cached_bits_ = 0;
    mutable std::optional<Interval> lambda_cache_, sqrt_delta_cache_;
};

// Exact square root in K_q if one exists (verified by squaring); nullopt
// when the root lies in a proper extension.  Used by the periodic-word
// realizer and the Delta-nonsquare certificate.
std::optional<FieldElem> field_sqrt(const FieldElem& d);

// Value a + b*sqrt(r) with a, b, r in K_q and r > 0, for the few thresholds
// that need one extra surd (the even Theta-max split and the odd alpha_2).
// Comparisons against K_q elements are exact via isolating the surd.
class QuadExt {
public:
    QuadExt(FieldElem a, FieldElem b, FieldElem r);
    const FieldElem& base() const { return a_; }
    const FieldElem& coeff() const { return b_; }
    const FieldElem& radicand() const { return r_; }
    // sign of (a + b sqrt(r)) - x
    int compare(const FieldElem& x) const;
    Interval enclosure(long bits) const;
    std::string decimal(int digits) const;

private:
    FieldElem a_, b_, r_;
};

} // namespace rosen
