#include "rosen/mat2.hpp"

#include "rosen/errors.hpp"

namespace rosen {

Mat2 Mat2::identity(const FieldCtxPtr& ctx)
{
    return {ctx->one(), ctx->zero(), ctx->zero(), ctx->one()};
}

Mat2 Mat2::gen_S(const FieldCtxPtr& ctx)
{
    return {ctx->one(), ctx->lambda(), ctx->zero(), ctx->one()};
}

Mat2 Mat2::gen_T(const FieldCtxPtr& ctx)
{
    return {ctx->zero(), ctx->from_int(-1), ctx->one(), ctx->zero()};
}

Mat2 Mat2::step_matrix(const Digit& g, const FieldCtxPtr& ctx)
{
    return {ctx->lambda() * Rat(-g.d), ctx->from_int(g.eps), ctx->one(), ctx->zero()};
}

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::adjugate() const
{
    return {d, -b, -c, a};
}

Mat2 Mat2::t_conj() const
{
    // T M T = [[-d, c],[b, -a]], projectively [[d, -c],[-b, a]]
    return {-d, c, b, -a};
}

Mat2 Mat2::pow(int n) const
{
    if (n < 0) throw parameter_error("Mat2::pow expects n >= 0");
    Mat2 r = identity(a.context());
    Mat2 base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

FieldElem Mat2::apply(const FieldElem& x) const
{
    FieldElem den = c * x + d;
    if (den.is_zero()) throw arithmetic_error("Moebius map applied at its pole");
    return (a * x + b) / den;
}

Interval Mat2::apply(const Interval& x, long bits) const
{
    Interval num = a.enclosure(bits) * x + b.enclosure(bits);
    Interval den = c.enclosure(bits) * x + d.enclosure(bits);
    return num / den;
}

bool Mat2::projectively_equal(const Mat2& o) const
{
    // find a nonzero entry pair and compare cross products
    const FieldElem* mine[4] = {&a, &b, &c, &d};
    const FieldElem* theirs[4] = {&o.a, &o.b, &o.c, &o.d};
    int ref = -1;
    for (int i = 0; i < 4; ++i)
        if (!mine[i]->is_zero()) { ref = i; break; }
    if (ref < 0) {
        for (int i = 0; i < 4; ++i)
            if (!theirs[i]->is_zero()) return false;
        return true;
    }
    if (theirs[ref]->is_zero()) return false;
    for (int i = 0; i < 4; ++i)
        if (*mine[i] * *theirs[ref] != *theirs[i] * *mine[ref]) return false;
    return true;
}

Mat2 word_matrix(const std::vector<Digit>& w, const FieldCtxPtr& ctx)
{
    Mat2 m = Mat2::identity(ctx);
    for (const Digit& g : w) m = Mat2::step_matrix(g, ctx) * m;
    return m;
}

} // namespace rosen
