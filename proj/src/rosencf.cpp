#include "rosen/rosencf.hpp"

#include "rosen/errors.hpp"

namespace rosen {

RealInput RealInput::exact(FieldElem x)
{
    RealInput r;
    r.ctx_ = x.context();
    r.exact_ = std::move(x);
    return r;
}

RealInput RealInput::ball(Interval x, FieldCtxPtr ctx)
{
    RealInput r;
    r.ctx_ = std::move(ctx);
    r.ball_ = std::move(x);
    return r;
}

const FieldElem& RealInput::exact_value() const
{
    if (!exact_) throw parameter_error("ball-kernel input has no exact value");
    return *exact_;
}

const Interval& RealInput::ball_value() const
{
    if (!ball_) throw parameter_error("exact-kernel input has no ball value");
    return *ball_;
}

double RealInput::to_double() const
{
    return is_exact() ? exact_->to_double() : ball_->to_double();
}

FieldElem cell_boundary(const FieldElem& alpha, long d)
{
    if (d < 1) throw parameter_error("cell index d must be >= 1");
    const auto& ctx = alpha.context();
    return ctx->one() / ((alpha + Rat(d)) * ctx->lambda());
}

static void check_in_range(const FieldElem& x, const FieldElem& alpha)
{
    const auto lam = x.context()->lambda();
    if ((x - (alpha - Rat(1)) * lam).sign() < 0 || (x - alpha * lam).sign() >= 0)
        throw parameter_error("x outside [(alpha-1)L, alpha L)");
}

Digit rosen_digit(const FieldElem& x, const FieldElem& alpha, bool check_range)
{
    if (x.is_zero()) throw arithmetic_error("digit of zero is undefined");
    if (check_range) check_in_range(x, alpha);
    const auto& ctx = x.context();
    int eps = x.sign();
    FieldElem inv = ctx->one() / (ctx->lambda() * x);
    if (eps < 0) inv = -inv;
    Int d = (inv + Rat(1) - alpha).floor();
    if (d < 1) throw internal_error("digit < 1 inside the fundamental interval");
    return Digit{eps, d};
}

Digit rosen_digit(const Interval& x, const FieldElem& alpha, const FieldCtxPtr& ctx)
{
    auto s = x.sign();
    if (!s || *s == 0)
        throw precision_error("digit: ball straddles zero");
    long bits = x.precision();
    Interval lam = ctx->lambda_enclosure(bits);
    Interval y = (lam * x).recip().abs() + Interval::from_long(1, bits) - alpha.enclosure(bits);
    auto [flo, fhi] = y.floor_range();
    if (flo != fhi) throw precision_error("digit: ball straddles a cell boundary");
    if (flo < 1) throw precision_error("digit: ball extends outside the fundamental interval");
    return Digit{*s, flo};
}

Digit rosen_digit(const RealInput& x, const FieldElem& alpha)
{
    return x.is_exact() ? rosen_digit(x.exact_value(), alpha)
                        : rosen_digit(x.ball_value(), alpha, x.context());
}

FieldElem rosen_step(const FieldElem& x, const FieldElem& alpha, bool check_range)
{
    if (x.is_zero()) return x.context()->zero();
    Digit g = rosen_digit(x, alpha, check_range);
    const auto& ctx = x.context();
    return ctx->from_int(g.eps) / x - ctx->lambda() * Rat(g.d);
}

Interval rosen_step(const Interval& x, const FieldElem& alpha, const FieldCtxPtr& ctx)
{
    Digit g = rosen_digit(x, alpha, ctx);
    long bits = x.precision();
    Interval lam = ctx->lambda_enclosure(bits);
    return Interval::from_long(g.eps, bits) / x - lam * Interval::from_rat(Rat(g.d), bits);
}

RealInput rosen_step(const RealInput& x, const FieldElem& alpha)
{
    if (x.is_exact()) return RealInput::exact(rosen_step(x.exact_value(), alpha));
    return RealInput::ball(rosen_step(x.ball_value(), alpha, x.context()), x.context());
}

Expansion expand(const RealInput& x0, const FieldElem& alpha, std::size_t n)
{
    if (n < 1) throw parameter_error("expansion length must be >= 1");
    Expansion out;
    RealInput x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.is_exact() && x.exact_value().is_zero()) {
            out.truncated = true;
            return out;
        }
        try {
            Digit g = rosen_digit(x, alpha);
            out.digits.push_back(g);
            x = rosen_step(x, alpha);
        } catch (const precision_error& e) {
            throw precision_error("expand: " + std::string(e.what()) + " at index " +
                                  std::to_string(i + 1));
        }
    }
    return out;
}

std::vector<Convergent> convergents(const std::vector<Digit>& w, const FieldCtxPtr& ctx)
{
    if (w.empty()) throw parameter_error("empty digit list");
    std::vector<Convergent> out;
    out.reserve(w.size());
    FieldElem p0 = ctx->one(), q0 = ctx->zero();  // index -1
    FieldElem p1 = ctx->zero(), q1 = ctx->one();  // index 0
    const FieldElem lam = ctx->lambda();
    for (std::size_t i = 0; i < w.size(); ++i) {
        FieldElem dl = lam * Rat(w[i].d);
        FieldElem p2 = dl * p1 + p0 * Rat(w[i].eps);
        FieldElem q2 = dl * q1 + q0 * Rat(w[i].eps);
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p2);
        q1 = std::move(q2);
        Convergent c;
        c.index = i + 1;
        int s = q1.is_zero() ? 1 : q1.sign();
        c.p = s < 0 ? -p1 : p1;
        c.q_den = s < 0 ? -q1 : q1;
        out.push_back(std::move(c));
    }
    return out;
}

FieldElem theta_direct(const FieldElem& x, const Convergent& c)
{
    if (c.q_den.is_zero()) throw arithmetic_error("convergent with zero denominator");
    FieldElem e = c.q_den * c.q_den * x - c.p * c.q_den;
    return e.sign() < 0 ? -e : e;
}

Interval theta_direct(const Interval& x, const Convergent& c, long bits)
{
    Interval q = c.q_den.enclosure(bits);
    Interval p = c.p.enclosure(bits);
    return (q * q * x - p * q).abs();
}

std::pair<FieldElem, FieldElem> theta_from_tv(const FieldElem& t, const FieldElem& v, int eps_next)
{
    FieldElem den = t * v + Rat(1);
    if (den.sign() <= 0)
        throw arithmetic_error("theta_from_tv: 1 + t v <= 0 (point outside Omega_alpha)");
    return {v / den, t * Rat(eps_next) / den};
}

std::pair<Interval, Interval> theta_from_tv(const Interval& t, const Interval& v, int eps_next)
{
    long bits = std::max(t.precision(), v.precision());
    Interval den = t * v + Interval::from_long(1, bits);
    auto s = den.sign();
    if (!s) throw precision_error("theta_from_tv: 1 + t v straddles zero");
    if (*s <= 0) throw arithmetic_error("theta_from_tv: 1 + t v <= 0");
    return {v / den, t * Interval::from_long(eps_next, bits) / den};
}

FieldElem theta_next(const FieldElem& t, const FieldElem& v, const Int& d, int eps1, int eps2)
{
    if (d < 1) throw parameter_error("theta_next: d must be >= 1");
    const auto& ctx = t.context();
    FieldElem den = t * v + Rat(1);
    if (den.sign() <= 0) throw arithmetic_error("theta_next: 1 + t v <= 0");
    FieldElem dl = ctx->lambda() * Rat(d);
    FieldElem one = ctx->one();
    return (one - dl * t * Rat(eps1)) * (dl + v * Rat(eps1)) * Rat(eps2) / den;
}

FieldElem b_seq(long n, const FieldCtxPtr& ctx)
{
    if (n < 0) throw parameter_error("b_seq index must be >= 0");
    FieldElem b0 = ctx->zero(), b1 = ctx->one();
    if (n == 0) return b0;
    const FieldElem lam = ctx->lambda();
    for (long i = 1; i < n; ++i) {
        FieldElem b2 = lam * b1 - b0;
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    return b1;
}

Mat2 value_matrix(const std::vector<Digit>& w, const FieldCtxPtr& ctx)
{
    Mat2 m = Mat2::identity(ctx);
    const FieldElem lam = ctx->lambda();
    for (const Digit& g : w) {
        Mat2 v{ctx->zero(), ctx->from_int(g.eps), ctx->one(), lam * Rat(g.d)};
        m = m * v;
    }
    return m;
}

Realized realize(const DigitWord& w, const FieldCtxPtr& ctx, long bits)
{
    if (w.pre.empty() && w.per.empty()) throw parameter_error("realize: empty word");

    if (!w.periodic()) {
        Mat2 m = value_matrix(w.pre, ctx);
        if (m.d.is_zero()) throw arithmetic_error("realize: finite word evaluates to infinity");
        Realized r;
        r.exact = m.b / m.d;
        r.ball = r.exact->enclosure(bits);
        return r;
    }

    Mat2 per = value_matrix(w.per, ctx);
    Mat2 pre = w.pre.empty() ? Mat2::identity(ctx) : value_matrix(w.pre, ctx);

    // fixed point of the period map: c w^2 + (d-a) w - b = 0
    FieldElem A = per.a, B = per.b, C = per.c, D = per.d;
    auto attracting = [&](const FieldElem& wfix) {
        // |per'(w)| < 1 <=> (C w + D)^2 > |det| = 1
        FieldElem m = C * wfix + D;
        return (m * m - Rat(1)).sign() > 0;
    };

    std::optional<FieldElem> wfix;
    if (C.is_zero()) {
        FieldElem lin = D - A;
        if (lin.is_zero()) throw arithmetic_error("realize: period map is a pure translation");
        wfix = B / lin;
        if (!attracting(*wfix)) throw arithmetic_error("realize: fixed point not attracting");
    } else {
        FieldElem disc = (D - A) * (D - A) + C * B * Rat(4);
        int ds = disc.sign();
        if (ds < 0) throw arithmetic_error("realize: elliptic period map (no real fixed point)");
        if (auto s = field_sqrt(disc)) {
            FieldElem r1 = (A - D + *s) / (C * Rat(2));
            FieldElem r2 = (A - D - *s) / (C * Rat(2));
            if (attracting(r1))
                wfix = r1;
            else if (attracting(r2))
                wfix = r2;
            else
                throw arithmetic_error("realize: parabolic period map (no attracting fixed point)");
        }
        if (!wfix) {
            // root in a quadratic extension of K_q: ball-only result
            for (long p = std::max<long>(bits + 64, 256); p <= (1L << 14); p *= 2) {
                Interval dI = disc.enclosure(p);
                Interval sI = Interval::sqrt(dI);
                Interval aI = A.enclosure(p), dI2 = D.enclosure(p), cI = C.enclosure(p);
                Interval two = Interval::from_long(2, p);
                Interval one = Interval::from_long(1, p);
                for (int pick = 0; pick < 2; ++pick) {
                    Interval r = (aI - dI2 + (pick ? -sI : sI)) / (cI * two);
                    Interval mI = cI * r + dI2;
                    Interval crit = mI * mI - one;
                    auto cs = crit.sign();
                    if (cs && *cs > 0) {
                        Realized out;
                        Interval num = pre.a.enclosure(p) * r + pre.b.enclosure(p);
                        Interval den = pre.c.enclosure(p) * r + pre.d.enclosure(p);
                        out.ball = num / den;
                        if (out.ball.rel_radius_leq(bits)) return out;
                    }
                }
            }
            throw precision_error("realize: could not certify the attracting root");
        }
    }

    Realized out;
    out.exact = pre.apply(*wfix);
    out.ball = out.exact->enclosure(bits);
    return out;
}

} // namespace rosen
