#include "rosen/numfield.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rosen/errors.hpp"

namespace rosen {

namespace {

std::vector<Rat> zero_coords(int m) { return std::vector<Rat>(m, Rat(0)); }

bool coords_zero(const std::vector<Rat>& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QPoly coords_to_poly(const std::vector<Rat>& v)
{
    return qp_trim(QPoly(v.begin(), v.end()));
}

std::vector<Rat> poly_to_coords(const QPoly& p, int m)
{
    std::vector<Rat> v(p.begin(), p.end());
    v.resize(m, Rat(0));
    return v;
}

// extended euclid: returns u with u*a == 1 mod m (a nonzero mod m, m irreducible)
QPoly poly_inverse_mod(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = a;
    QPoly u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly u2 = qp_sub(u0, qp_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (qp_deg(r0) != 0) throw internal_error("gcd with minimal polynomial is not constant");
    return qp_scale(u0, Rat(1) / r0[0]);
}

bool rat_is_square(const Rat& r, Rat* root)
{
    if (r < 0) return false;
    Int n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    if (root) *root = Rat(sn) / Rat(sd);
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldContext

FieldCtxPtr FieldContext::create(int q)
{
    if (q < 3) throw parameter_error("field_setup: q must be >= 3");

    static std::mutex reg_mutex;
    static std::map<int, std::weak_ptr<const FieldContext>> registry;
    {
        std::lock_guard<std::mutex> lock(reg_mutex);
        auto it = registry.find(q);
        if (it != registry.end())
            if (auto p = it->second.lock()) return p;
    }

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->q_ = q;
    ctx->minpoly_ = cos_minpoly(q);
    ctx->degree_ = qp_deg(ctx->minpoly_);
    const int m = ctx->degree_;

    // lambda^(m+j) in the basis, j = 0 .. m-2
    std::vector<Rat> row(ctx->minpoly_.begin(), ctx->minpoly_.end() - 1);
    for (auto& c : row) c = -c;
    ctx->red_rows_.push_back(row);
    for (int j = 1; j <= m - 2; ++j) {
        std::vector<Rat> next(m, Rat(0));
        const auto& prev = ctx->red_rows_.back();
        // multiply by lambda, then reduce the overflow coefficient
        for (int i = 0; i + 1 < m; ++i) next[i + 1] = prev[i];
        const Rat& top = prev[m - 1];
        if (top != 0)
            for (int i = 0; i < m; ++i) next[i] += top * ctx->red_rows_[0][i];
        ctx->red_rows_.push_back(std::move(next));
    }

    for (int j = 1; j < q; ++j)
        if (std::gcd(j, 2 * q) == 1) ctx->units_.push_back(j);
    if (static_cast<int>(ctx->units_.size()) != m)
        throw internal_error("embedding count does not match field degree");

    if (q % 2 == 1) {
        QPoly dpoly = {Rat(8), Rat(-4), Rat(1)};
        auto [dq, dr] = qp_divmod(dpoly, ctx->minpoly_);
        (void)dq;
        ctx->delta_coords_ = poly_to_coords(dr, m);
        // formal independence of sqrt(Delta): certify Delta is not a square
        // in Q(lambda).  Necessary condition first: the norm must be a
        // rational square for Delta to be one.
        Rat norm = qp_resultant(ctx->minpoly_, dpoly);
        if (norm == 0) throw internal_error("Delta has zero norm");
        if (rat_is_square(norm, nullptr)) {
            FieldElem delta(ctx, ctx->delta_coords(), zero_coords(m));
            if (field_sqrt(delta))
                throw internal_error("Delta is a square in Q(lambda); K_q zero test unsound for q=" +
                                     std::to_string(q));
        }
    }

    std::lock_guard<std::mutex> lock(reg_mutex);
    registry[q] = ctx;
    return ctx;
}

std::vector<Rat> FieldContext::reduce(std::vector<Rat> conv) const
{
    const int m = degree_;
    for (int k = static_cast<int>(conv.size()) - 1; k >= m; --k) {
        const Rat c = conv[k];
        if (c == 0) continue;
        conv[k] = 0;
        const auto& row = red_rows_[k - m];
        for (int i = 0; i < m; ++i) conv[i] += c * row[i];
    }
    conv.resize(m, Rat(0));
    return conv;
}

std::vector<Rat> FieldContext::mul_coords(const std::vector<Rat>& a, const std::vector<Rat>& b) const
{
    const int m = degree_;
    std::vector<Rat> conv(2 * m - 1, Rat(0));
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(conv));
}

std::vector<Rat> FieldContext::inv_coords(const std::vector<Rat>& a) const
{
    QPoly ap = coords_to_poly(a);
    if (ap.empty()) throw arithmetic_error("division by zero in Q(lambda)");
    return poly_to_coords(poly_inverse_mod(ap, minpoly_), degree_);
}

FieldElem FieldContext::zero() const
{
    auto self = shared_from_this();
    return FieldElem(self, zero_coords(degree_), is_odd() ? zero_coords(degree_) : zero_coords(0));
}

FieldElem FieldContext::one() const { return from_rational(Rat(1)); }

FieldElem FieldContext::from_rational(const Rat& r) const
{
    FieldElem e = zero();
    e.re_[0] = r;
    e.re_[0].canonicalize();
    return e;
}

FieldElem FieldContext::from_lambda_poly(const QPoly& p) const
{
    QPoly canon = p;
    for (auto& c : canon) c.canonicalize();
    auto [q, rem] = qp_divmod(canon, minpoly_);
    (void)q;
    FieldElem e = zero();
    e.re_ = poly_to_coords(rem, degree_);
    return e;
}

FieldElem FieldContext::from_parts(const QPoly& re, const QPoly& su) const
{
    if (!is_odd() && !qp_trim(su).empty())
        throw parameter_error("surd part requires an odd-q context");
    FieldElem e = from_lambda_poly(re);
    if (is_odd()) {
        QPoly canon = su;
        for (auto& c : canon) c.canonicalize();
        auto [q2, rem2] = qp_divmod(canon, minpoly_);
        (void)q2;
        e.su_ = poly_to_coords(rem2, degree_);
    }
    return e;
}

FieldElem FieldContext::lambda() const
{
    return from_lambda_poly(QPoly{Rat(0), Rat(1)});
}

FieldElem FieldContext::delta() const
{
    if (!is_odd()) throw case_error("Delta is defined for odd q only");
    auto self = shared_from_this();
    return FieldElem(self, delta_coords_, zero_coords(degree_));
}

FieldElem FieldContext::sqrt_delta() const
{
    if (!is_odd()) throw case_error("sqrt(Delta) is defined for odd q only");
    auto self = shared_from_this();
    std::vector<Rat> su = zero_coords(degree_);
    su[0] = 1;
    return FieldElem(self, zero_coords(degree_), std::move(su));
}

FieldElem FieldContext::rho() const
{
    if (!is_odd()) throw case_error("rho is defined for odd q only");
    return (lambda() - Rat(2) + sqrt_delta()) / Rat(2);
}

FieldElem FieldContext::hurwitz() const
{
    if (!is_odd()) return from_rational(Rat(1, 2));
    FieldElem r = rho();
    return r / (r * r + Rat(1));
}

Interval FieldContext::lambda_enclosure(long bits) const
{
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (cached_bits_ < bits || !lambda_cache_) {
        long p = std::max<long>(bits + 16, 64);
        lambda_cache_ = Interval::two_cos_pi_over(q_, p);
        if (is_odd()) {
            Interval d = qp_eval(coords_to_poly(delta_coords_), *lambda_cache_);
            sqrt_delta_cache_ = Interval::sqrt(d);
        }
        cached_bits_ = bits;
    }
    return *lambda_cache_;
}

Interval FieldContext::sqrt_delta_enclosure(long bits) const
{
    if (!is_odd()) throw case_error("sqrt(Delta) is defined for odd q only");
    lambda_enclosure(bits);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return *sqrt_delta_cache_;
}

std::vector<Interval> FieldContext::conjugate_lambdas(long bits) const
{
    std::vector<Interval> out;
    out.reserve(units_.size());
    for (int j : units_) {
        // 2cos(j*pi/q) via the angle j*pi/q in (0, pi)
        Interval x(bits + 16);
        mpfr_t a_lo, a_hi, c_lo, c_hi;
        mpfr_init2(a_lo, bits + 16);
        mpfr_init2(a_hi, bits + 16);
        mpfr_init2(c_lo, bits + 16);
        mpfr_init2(c_hi, bits + 16);
        mpfr_const_pi(a_lo, MPFR_RNDD);
        mpfr_const_pi(a_hi, MPFR_RNDU);
        mpfr_mul_si(a_lo, a_lo, j, MPFR_RNDD);
        mpfr_mul_si(a_hi, a_hi, j, MPFR_RNDU);
        mpfr_div_si(a_lo, a_lo, q_, MPFR_RNDD);
        mpfr_div_si(a_hi, a_hi, q_, MPFR_RNDU);
        // cos decreasing on (0, pi)
        mpfr_cos(c_lo, a_hi, MPFR_RNDD);
        mpfr_cos(c_hi, a_lo, MPFR_RNDU);
        Rat lo = [&] { mpq_t t; mpq_init(t); mpfr_get_q(t, c_lo); Rat r(t); mpq_clear(t); return r; }();
        Rat hi = [&] { mpq_t t; mpq_init(t); mpfr_get_q(t, c_hi); Rat r(t); mpq_clear(t); return r; }();
        out.push_back(Interval::from_endpoints(2 * lo, 2 * hi, bits + 16));
        mpfr_clear(a_lo);
        mpfr_clear(a_hi);
        mpfr_clear(c_lo);
        mpfr_clear(c_hi);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(FieldCtxPtr ctx, std::vector<Rat> re, std::vector<Rat> su)
    : ctx_(std::move(ctx)), re_(std::move(re)), su_(std::move(su))
{
}

bool FieldElem::is_zero() const
{
    return coords_zero(re_) && coords_zero(su_);
}

bool FieldElem::is_rational() const
{
    if (!coords_zero(su_)) return false;
    for (std::size_t i = 1; i < re_.size(); ++i)
        if (re_[i] != 0) return false;
    return true;
}

Rat FieldElem::rational_value() const
{
    if (!is_rational()) throw parameter_error("element is not rational");
    return re_.empty() ? Rat(0) : re_[0];
}

bool FieldElem::has_surd() const { return !coords_zero(su_); }

bool FieldElem::operator==(const FieldElem& o) const
{
    if (ctx_ != o.ctx_) throw parameter_error("field context mismatch");
    return re_ == o.re_ && su_ == o.su_;
}

static void check_same_ctx(const FieldElem& a, const FieldElem& b)
{
    if (!a.valid() || !b.valid() || a.context() != b.context())
        throw parameter_error("field context mismatch");
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    for (auto& x : r.re_) x = -x;
    for (auto& x : r.su_) x = -x;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b)
{
    check_same_ctx(a, b);
    FieldElem r = a;
    for (std::size_t i = 0; i < r.re_.size(); ++i) r.re_[i] += b.re_[i];
    for (std::size_t i = 0; i < r.su_.size(); ++i) r.su_[i] += b.su_[i];
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b)
{
    check_same_ctx(a, b);
    FieldElem r = a;
    for (std::size_t i = 0; i < r.re_.size(); ++i) r.re_[i] -= b.re_[i];
    for (std::size_t i = 0; i < r.su_.size(); ++i) r.su_[i] -= b.su_[i];
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b)
{
    check_same_ctx(a, b);
    const auto& ctx = *a.context();
    FieldElem r = a.context()->zero();
    r.re_ = ctx.mul_coords(a.re_, b.re_);
    if (ctx.is_odd()) {
        if (!coords_zero(a.su_) && !coords_zero(b.su_)) {
            auto ss = ctx.mul_coords(a.su_, b.su_);
            auto ssd = ctx.mul_coords(ss, ctx.delta_coords());
            for (int i = 0; i < ctx.degree(); ++i) r.re_[i] += ssd[i];
        }
        auto asbs = ctx.mul_coords(a.re_, b.su_);
        auto bsas = ctx.mul_coords(b.re_, a.su_);
        for (int i = 0; i < ctx.degree(); ++i) r.su_[i] = asbs[i] + bsas[i];
    }
    return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b)
{
    check_same_ctx(a, b);
    if (b.is_zero()) throw arithmetic_error("division by zero in K_q");
    const auto& ctx = *a.context();
    if (!ctx.is_odd() || coords_zero(b.su_)) {
        FieldElem r = a;
        auto inv = ctx.inv_coords(b.re_);
        r.re_ = ctx.mul_coords(a.re_, inv);
        if (ctx.is_odd()) r.su_ = ctx.mul_coords(a.su_, inv);
        return r;
    }
    // rationalize: 1/(A + B s) = (A - B s)/(A^2 - B^2 Delta)
    auto a2 = ctx.mul_coords(b.re_, b.re_);
    auto b2d = ctx.mul_coords(ctx.mul_coords(b.su_, b.su_), ctx.delta_coords());
    std::vector<Rat> den(ctx.degree());
    for (int i = 0; i < ctx.degree(); ++i) den[i] = a2[i] - b2d[i];
    if (coords_zero(den))
        throw internal_error("norm of a nonzero element vanished: sqrt(Delta) not independent?");
    FieldElem conj = b.context()->zero();
    conj.re_ = b.re_;
    for (int i = 0; i < ctx.degree(); ++i) conj.su_[i] = -b.su_[i];
    FieldElem num = a * conj;
    auto invden = ctx.inv_coords(den);
    FieldElem r = a.context()->zero();
    r.re_ = ctx.mul_coords(num.re_, invden);
    r.su_ = ctx.mul_coords(num.su_, invden);
    return r;
}

FieldElem FieldElem::operator+(const Rat& r) const
{
    FieldElem e = *this;
    Rat rc = r;
    rc.canonicalize();
    e.re_[0] += rc;
    return e;
}

FieldElem FieldElem::operator-(const Rat& r) const
{
    FieldElem e = *this;
    Rat rc = r;
    rc.canonicalize();
    e.re_[0] -= rc;
    return e;
}

FieldElem FieldElem::operator*(const Rat& r) const
{
    FieldElem e = *this;
    Rat rc = r;
    rc.canonicalize();
    for (auto& x : e.re_) x *= rc;
    for (auto& x : e.su_) x *= rc;
    return e;
}

FieldElem FieldElem::operator/(const Rat& r) const
{
    if (r == 0) throw arithmetic_error("division by zero rational");
    FieldElem e = *this;
    Rat rc = r;
    rc.canonicalize();
    for (auto& x : e.re_) x /= rc;
    for (auto& x : e.su_) x /= rc;
    return e;
}

static Interval eval_elem(const FieldElem& e, long bits)
{
    const auto& ctx = *e.context();
    Interval lam = ctx.lambda_enclosure(bits);
    Interval v = qp_eval(coords_to_poly(e.rational_coords()), lam);
    if (ctx.is_odd() && e.has_surd()) {
        Interval s = ctx.sqrt_delta_enclosure(bits);
        v = v + qp_eval(coords_to_poly(e.surd_coords()), lam) * s;
    }
    return v;
}

int FieldElem::sign() const
{
    if (!valid()) throw parameter_error("invalid field element");
    if (is_zero()) return 0;
    for (long bits = 256; bits <= ctx_->precision_cap(); bits *= 2) {
        auto s = eval_elem(*this, bits).sign();
        if (s && *s != 0) return *s;
    }
    throw precision_error("sign undecided at precision cap; suspected untracked algebraic identity");
}

Interval FieldElem::enclosure(long bits) const
{
    if (!valid()) throw parameter_error("invalid field element");
    if (bits < 1) bits = 1;
    if (is_zero()) return Interval(bits + 16);
    for (long p = bits + 64;; p *= 2) {
        Interval v = eval_elem(*this, p);
        if (v.rel_radius_leq(bits)) return v;
        if (p > (1L << 22)) throw internal_error("enclosure refinement runaway");
    }
}

std::string FieldElem::decimal(int digits) const
{
    long bits = static_cast<long>(digits * 3.33) + 24;
    return enclosure(bits).decimal(digits);
}

Int FieldElem::floor() const
{
    if (is_zero()) return Int(0);
    for (long p = 96;; p *= 2) {
        Interval v = eval_elem(*this, p);
        auto [flo, fhi] = v.floor_range();
        if (fhi - flo <= 2) {
            for (Int n = flo; n <= fhi; ++n) {
                // n <= x < n+1, settled exactly
                FieldElem dn = *this - Rat(n);
                if (dn.sign() >= 0 && (dn - Rat(1)).sign() < 0) return n;
            }
        }
        if (p > (1L << 22)) throw internal_error("floor refinement runaway");
    }
}

std::string FieldElem::str() const
{
    auto part = [](const std::vector<Rat>& v) {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (any) os << " + ";
            os << v[i].get_str();
            if (i == 1) os << "*L";
            if (i > 1) os << "*L^" << i;
            any = true;
        }
        if (!any) os << "0";
        return os.str();
    };
    std::ostringstream os;
    os << "(" << part(re_) << ")";
    if (has_surd()) os << " + (" << part(su_) << ")*sqrtD";
    return os.str();
}

// ---------------------------------------------------------------------------
// exact square roots

namespace {

// smallest-denominator rational within tol of x, denominator <= bound
std::optional<Rat> rational_reconstruct(const Rat& x, const Rat& tol, const Int& den_bound)
{
    // continued fraction convergents of x
    Int p0(1), q0(0);
    Int p1 = rat_floor(x), q1(1);
    Rat rem = x - Rat(p1);
    for (int iter = 0; iter < 512; ++iter) {
        Rat approx = Rat(p1) / Rat(q1);
        Rat err = x - approx;
        if (err < 0) err = -err;
        if (err <= tol) return approx;
        if (rem == 0) return std::nullopt;
        Rat inv = Rat(1) / rem;
        Int a = rat_floor(inv);
        rem = inv - Rat(a);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > den_bound) return std::nullopt;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return std::nullopt;
}

// solve V u = w with V[j][i] = y_j^i by interval Gaussian elimination
std::vector<Interval> solve_vandermonde(const std::vector<Interval>& ys, std::vector<Interval> w)
{
    const int m = static_cast<int>(ys.size());
    long prec = ys.empty() ? 64 : ys[0].precision();
    std::vector<std::vector<Interval>> a(m, std::vector<Interval>(m, Interval(prec)));
    for (int j = 0; j < m; ++j) {
        Interval p = Interval::from_long(1, prec);
        for (int i = 0; i < m; ++i) {
            a[j][i] = p;
            p = p * ys[j];
        }
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        double best = 0;
        for (int rj = c; rj < m; ++rj) {
            double mag = std::abs(a[rj][c].to_double());
            if (piv < 0 || mag > best) { piv = rj; best = mag; }
        }
        std::swap(a[c], a[piv]);
        std::swap(w[c], w[piv]);
        for (int rj = c + 1; rj < m; ++rj) {
            Interval f = a[rj][c] / a[c][c];
            for (int cc = c; cc < m; ++cc) a[rj][cc] = a[rj][cc] - f * a[c][cc];
            w[rj] = w[rj] - f * w[c];
        }
    }
    std::vector<Interval> u(m, Interval(prec));
    for (int rj = m - 1; rj >= 0; --rj) {
        Interval acc = w[rj];
        for (int cc = rj + 1; cc < m; ++cc) acc = acc - a[rj][cc] * u[cc];
        u[rj] = acc / a[rj][rj];
    }
    return u;
}

// exact square root within Q(lambda), verified by squaring
std::optional<std::vector<Rat>> sqrt_in_qlambda(const FieldContext& ctx, const std::vector<Rat>& d)
{
    if (coords_zero(d)) return zero_coords(ctx.degree());
    const int m = ctx.degree();
    QPoly dp = coords_to_poly(d);

    for (long prec : {256L, 768L, 2048L}) {
        auto ys = ctx.conjugate_lambdas(prec);
        std::vector<Interval> vals;
        bool negative = false, unsure = false;
        for (const auto& y : ys) {
            Interval v = qp_eval(dp, y);
            auto s = v.sign();
            if (!s) { unsure = true; break; }
            if (*s < 0) { negative = true; break; }
            vals.push_back(v);
        }
        if (negative) return std::nullopt; // a conjugate is negative: no real square root in the field
        if (unsure) continue;

        std::vector<Interval> roots;
        for (const auto& v : vals) roots.push_back(Interval::sqrt(v));

        Int den_bound = Int(1) << static_cast<int>(prec / 3);
        Rat tol = Rat(1) / Rat(Int(1) << static_cast<int>(prec / 2));
        const int combos = 1 << (m - 1);
        for (int mask = 0; mask < combos; ++mask) {
            std::vector<Interval> w;
            w.push_back(roots[0]);
            for (int j = 1; j < m; ++j) w.push_back((mask >> (j - 1)) & 1 ? -roots[j] : roots[j]);
            std::vector<Interval> u;
            try {
                u = solve_vandermonde(ys, w);
            } catch (const precision_error&) {
                continue;
            }
            std::vector<Rat> cand(m);
            bool ok = true;
            for (int i = 0; i < m; ++i) {
                auto r = rational_reconstruct(u[i].mid_rat(), tol, den_bound);
                if (!r) { ok = false; break; }
                cand[i] = *r;
            }
            if (!ok) continue;
            if (ctx.mul_coords(cand, cand) == d) return cand;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<FieldElem> field_sqrt(const FieldElem& d)
{
    if (!d.valid()) throw parameter_error("invalid field element");
    const auto& ctx = *d.context();
    auto make = [&](std::vector<Rat> re, std::vector<Rat> su) {
        FieldElem e = d.context()->zero();
        e.re_ = std::move(re);
        if (ctx.is_odd()) e.su_ = std::move(su);
        FieldElem r = e.sign() >= 0 ? e : -e;
        return r;
    };

    if (d.is_zero()) return d.context()->zero();
    if (d.sign() < 0) return std::nullopt;

    if (!ctx.is_odd() || !d.has_surd()) {
        // try sqrt in Q(lambda), then w*sqrt(Delta) with w in Q(lambda)
        if (auto s = sqrt_in_qlambda(ctx, d.rational_coords()))
            return make(*s, zero_coords(ctx.degree()));
        if (ctx.is_odd()) {
            auto dd = ctx.mul_coords(d.rational_coords(), ctx.inv_coords(ctx.delta_coords()));
            if (auto w = sqrt_in_qlambda(ctx, dd))
                return make(zero_coords(ctx.degree()), *w);
        }
        return std::nullopt;
    }

    // d = A + B s, B != 0: u^2 = (A +- sqrt(A^2 - B^2 Delta))/2, w = B/(2u)
    auto a2 = ctx.mul_coords(d.rational_coords(), d.rational_coords());
    auto b2d = ctx.mul_coords(ctx.mul_coords(d.surd_coords(), d.surd_coords()), ctx.delta_coords());
    std::vector<Rat> n(ctx.degree());
    for (int i = 0; i < ctx.degree(); ++i) n[i] = a2[i] - b2d[i];
    auto ns = sqrt_in_qlambda(ctx, n);
    if (!ns) return std::nullopt;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rat> u2(ctx.degree());
        for (int i = 0; i < ctx.degree(); ++i) {
            u2[i] = (d.rational_coords()[i] + (attempt == 0 ? (*ns)[i] : -(*ns)[i])) / 2;
        }
        if (auto u = sqrt_in_qlambda(ctx, u2)) {
            if (coords_zero(*u)) continue;
            auto w = ctx.mul_coords(d.surd_coords(), ctx.inv_coords(*u));
            for (auto& x : w) x /= 2;
            FieldElem cand = make(*u, w);
            if (cand * cand == d) return cand;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// QuadExt

QuadExt::QuadExt(FieldElem a, FieldElem b, FieldElem r)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(r))
{
    if (r_.sign() < 0) throw parameter_error("QuadExt radicand must be nonnegative");
}

int QuadExt::compare(const FieldElem& x) const
{
    FieldElem t = x - a_; // compare b*sqrt(r) against t
    int sb = b_.is_zero() || r_.is_zero() ? 0 : b_.sign();
    int st = t.sign();
    if (sb == 0) return -st;
    if (st == 0) return sb;
    if (sb != st) return sb;
    FieldElem diff = b_ * b_ * r_ - t * t;
    return sb * diff.sign();
}

Interval QuadExt::enclosure(long bits) const
{
    Interval v = a_.enclosure(bits + 32);
    if (!b_.is_zero() && !r_.is_zero())
        v = v + b_.enclosure(bits + 32) * Interval::sqrt(r_.enclosure(bits + 32));
    return v;
}

std::string QuadExt::decimal(int digits) const
{
    long bits = static_cast<long>(digits * 3.33) + 24;
    return enclosure(bits).decimal(digits);
}

} // namespace rosen
