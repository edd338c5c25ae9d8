#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rosen/errors.hpp"
#include "rosen/numfield.hpp"

using namespace rosen;

namespace {

FieldElem random_elem(const FieldCtxPtr& ctx, std::mt19937_64& rng, bool with_surd = true)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    QPoly re(ctx->degree()), su(ctx->degree());
    for (auto& c : re) c = make_rat(num(rng), den(rng));
    if (ctx->is_odd() && with_surd)
        for (auto& c : su) c = make_rat(num(rng), den(rng));
    return ctx->from_parts(re, ctx->is_odd() ? su : QPoly{});
}

} // namespace

TEST_CASE("field_setup minimal polynomials")
{
    auto c4 = FieldContext::create(4);
    CHECK(c4->minpoly() == QPoly{Rat(-2), Rat(0), Rat(1)}); // x^2 - 2
    auto c3 = FieldContext::create(3);
    CHECK(c3->minpoly() == QPoly{Rat(-1), Rat(1)}); // x - 1
    auto c5 = FieldContext::create(5);
    CHECK(c5->minpoly() == QPoly{Rat(-1), Rat(-1), Rat(1)}); // x^2 - x - 1
    auto c7 = FieldContext::create(7);
    CHECK(c7->degree() == 3);
    auto c12 = FieldContext::create(12);
    CHECK(c12->degree() == 4);

    CHECK_THROWS_AS(FieldContext::create(2), parameter_error);
    CHECK_THROWS_AS(FieldContext::create(0), parameter_error);
}

TEST_CASE("rho satisfies its quadratic and q=3 collapses to the golden case")
{
    for (int q : {3, 5, 7, 9}) {
        auto ctx = FieldContext::create(q);
        FieldElem rho = ctx->rho();
        FieldElem lam = ctx->lambda();
        CHECK((rho * rho + (Rat(2) - lam) * rho - Rat(1)).is_zero());
        // rho/(rho^2+1) = H_q = 1/sqrt(Delta)
        CHECK(ctx->hurwitz() == ctx->sqrt_delta() / ctx->delta());
    }
    auto c3 = FieldContext::create(3);
    CHECK(c3->lambda() == c3->one());
    // rho/lambda = (sqrt5 - 1)/2: its square plus itself equals 1
    FieldElem g = c3->rho() / c3->lambda();
    CHECK((g * g + g - Rat(1)).is_zero());
    CHECK(c3->hurwitz().decimal(6) == "0.447214"); // 1/sqrt(5)
}

TEST_CASE("arithmetic identities and errors")
{
    auto c4 = FieldContext::create(4);
    CHECK(c4->lambda() * c4->lambda() == c4->from_int(2));

    auto c5 = FieldContext::create(5);
    FieldElem rho = c5->rho();
    CHECK(rho * rho == (c5->lambda() - Rat(2)) * rho + Rat(1));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto ctx = (i % 2) ? c5 : c4;
        FieldElem a = random_elem(ctx, rng);
        CHECK((a - a).is_zero());
        FieldElem b = random_elem(ctx, rng);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }

    CHECK_THROWS_AS(c4->one() / c4->zero(), arithmetic_error);
    CHECK_THROWS_AS(c4->lambda() + c5->lambda(), parameter_error);
}

TEST_CASE("adaptive sign")
{
    auto c4 = FieldContext::create(4);
    CHECK((c4->lambda() - Rat(1)).sign() == 1);
    CHECK(c4->zero().sign() == 0);

    // q=7: rho/lambda - 1/2 > 0 (100-digit check gives 0.50271...)
    auto c7 = FieldContext::create(7);
    CHECK((c7->rho() / c7->lambda() - Rat(1, 2)).sign() == 1);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        auto ctx = (i % 3 == 0) ? FieldContext::create(5) : FieldContext::create(8);
        FieldElem a = random_elem(ctx, rng);
        FieldElem b = random_elem(ctx, rng);
        int sa = a.sign(), sb = b.sign();
        if (sa == 1 && sb == 1) CHECK((a + b).sign() == 1);
        CHECK((a * b).sign() == sa * sb);
    }
}

TEST_CASE("enclosures: nesting and paper decimals")
{
    auto c4 = FieldContext::create(4);
    Interval lam64 = c4->lambda().enclosure(64);
    Interval lam128 = c4->lambda().enclosure(128);
    CHECK(lam64.lo_rat() <= lam128.lo_rat());
    CHECK(lam128.hi_rat() <= lam64.hi_rat());
    CHECK(c4->lambda().decimal(8) == "1.41421356");

    // q=9: alpha_4 = ((2-L)H - 2)/(((L-2)H - 2... ) per Section 4 constants
    auto c9 = FieldContext::create(9);
    FieldElem lam = c9->lambda(), H = c9->hurwitz();
    FieldElem a4 = ((Rat(2) - lam) * H - Rat(2)) / ((lam * H - Rat(2) * H - Rat(2)) * lam);
    CHECK(a4.decimal(6) == "0.500994");

    // q=5: H_q via an independent interval-only route
    auto c5 = FieldContext::create(5);
    Interval l5 = Interval::two_cos_pi_over(5, 256);
    Interval d5 = l5 * l5 - Interval::from_long(4, 256) * l5 + Interval::from_long(8, 256);
    Interval h5 = Interval::sqrt(d5).recip();
    Interval h5f = c5->hurwitz().enclosure(200);
    CHECK(h5f.lo_rat() <= h5.hi_rat());
    CHECK(h5.lo_rat() <= h5f.hi_rat());
}

TEST_CASE("exact floor")
{
    auto c4 = FieldContext::create(4);
    CHECK(c4->lambda().floor() == 1);
    CHECK((-c4->lambda()).floor() == -2);
    CHECK(c4->from_int(3).floor() == 3);
    CHECK((c4->lambda() * c4->lambda()).floor() == 2); // exactly 2
    CHECK(c4->from_rational(Rat(-7, 2)).floor() == -4);
}

TEST_CASE("field square roots, verified")
{
    auto c4 = FieldContext::create(4);
    FieldElem lam = c4->lambda();
    FieldElem sq = (lam + Rat(1)) * (lam + Rat(1));
    auto r = field_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(*r == lam + Rat(1));
    CHECK(!field_sqrt(lam).has_value()); // 2^(1/4) is not in Q(sqrt 2)

    auto c5 = FieldContext::create(5);
    auto sd = field_sqrt(c5->delta());
    REQUIRE(sd.has_value());
    CHECK(*sd == c5->sqrt_delta());
    FieldElem rho = c5->rho();
    auto rr = field_sqrt(rho * rho);
    REQUIRE(rr.has_value());
    CHECK(*rr == rho);
    CHECK(!field_sqrt(-c5->one()).has_value());
}

TEST_CASE("QuadExt comparisons")
{
    auto c4 = FieldContext::create(4);
    // value 1 + sqrt(3) ~ 2.732
    QuadExt v(c4->one(), c4->one(), c4->from_int(3));
    CHECK(v.compare(c4->from_int(2)) == 1);
    CHECK(v.compare(c4->from_int(3)) == -1);
    CHECK(v.compare(c4->from_rational(parse_rational("2.7320508"))) == 1);
    CHECK(v.compare(c4->from_rational(parse_rational("2.7320509"))) == -1);
    // degenerate b = 0
    QuadExt w(c4->lambda(), c4->zero(), c4->from_int(5));
    CHECK(w.compare(c4->from_int(1)) == 1);
    CHECK(w.compare(c4->from_int(2)) == -1);
    CHECK(w.compare(c4->lambda()) == 0);
}

TEST_CASE("decimal parsing is exact")
{
    CHECK(parse_rational("0.52") == Rat(13, 25));
    CHECK(parse_rational("3/5") == Rat(3, 5));
    CHECK(parse_rational("-1.5e-3") == Rat(-3, 2000));
    CHECK(parse_rational("2") == Rat(2));
    CHECK_THROWS_AS(parse_rational("abc"), parameter_error);
    CHECK(rat_decimal(Rat(1, 3), 6) == "0.333333");
    CHECK(rat_decimal(Rat(-1, 2), 2) == "-0.50");
}
