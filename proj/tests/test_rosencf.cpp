#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rosen/errors.hpp"
#include "rosen/rosencf.hpp"

using namespace rosen;

namespace {

// v_n recurrence alongside the t-orbit: v <- 1/(d L + eps v)
struct OrbitPoint {
    FieldElem t, v;
    Digit g; // digit consumed to get here
};

std::vector<OrbitPoint> exact_orbit(const FieldElem& x, const FieldElem& alpha, int n)
{
    auto ctx = x.context();
    std::vector<OrbitPoint> out;
    FieldElem t = x, v = ctx->zero();
    for (int i = 0; i < n; ++i) {
        Digit g = rosen_digit(t, alpha);
        FieldElem t2 = ctx->from_int(g.eps) / t - ctx->lambda() * Rat(g.d);
        v = ctx->one() / (ctx->lambda() * Rat(g.d) + v * Rat(g.eps));
        t = t2;
        out.push_back({t, v, g});
    }
    return out;
}

} // namespace

TEST_CASE("digit extraction")
{
    auto c4 = FieldContext::create(4);
    FieldElem half = c4->from_rational(Rat(1, 2));

    // on the boundary x = delta_1 the floor rule gives d = 2
    FieldElem alpha = c4->from_rational(Rat(3, 5));
    FieldElem d1 = cell_boundary(alpha, 1);
    Digit g = rosen_digit(d1, alpha);
    CHECK(g.eps == 1);
    CHECK(g.d == 2);

    // q=4, alpha=1/2, x=0.3: double-precision oracle gives eps=+1, d=2
    g = rosen_digit(c4->from_rational(Rat(3, 10)), half);
    CHECK(g.eps == 1);
    CHECK(g.d == 2);

    // q=4, alpha=0.6, x=l_0: oracle gives eps=-1, d=1
    FieldElem l0 = (alpha - Rat(1)) * c4->lambda();
    g = rosen_digit(l0, alpha);
    CHECK(g.eps == -1);
    CHECK(g.d == 1);

    CHECK_THROWS_AS(rosen_digit(c4->zero(), alpha), arithmetic_error);
    // outside the fundamental interval
    CHECK_THROWS_AS(rosen_digit(c4->from_int(2), alpha), parameter_error);

    // ball kernel agrees with the exact kernel away from boundaries
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(1, 999);
    for (int i = 0; i < 25; ++i) {
        Rat u(num(rng), 1000);
        FieldElem x = (alpha - Rat(1) + u) * c4->lambda();
        if (x.is_zero()) continue;
        Digit ge = rosen_digit(x, alpha);
        Digit gb = rosen_digit(x.enclosure(128), alpha, c4);
        CHECK(ge == gb);
    }
}

TEST_CASE("T_alpha step")
{
    auto c4 = FieldContext::create(4);
    FieldElem alpha = c4->from_rational(Rat(3, 5));
    CHECK(rosen_step(c4->zero(), alpha).is_zero());

    // T(l_0) = l_1 with 0 < l_1 < r_0 (position theorem, p=2)
    FieldElem l0 = (alpha - Rat(1)) * c4->lambda();
    FieldElem l1 = rosen_step(l0, alpha);
    CHECK(l1.sign() > 0);
    CHECK((alpha * c4->lambda() - l1).sign() > 0);
    // double oracle: l_0 ~ -0.56569 maps to ~0.35355
    CHECK(l1.decimal(5) == "0.35355");

    // orbit confinement on random rational starts
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(1, 9999);
    for (int trial = 0; trial < 10; ++trial) {
        FieldElem x = (alpha - Rat(1) + Rat(num(rng), 10000)) * c4->lambda();
        for (int i = 0; i < 30 && !x.is_zero(); ++i) {
            x = rosen_step(x, alpha);
            if (x.is_zero()) break;
            CHECK((x - (alpha - Rat(1)) * c4->lambda()).sign() >= 0);
            CHECK((alpha * c4->lambda() - x).sign() > 0);
        }
    }
}

TEST_CASE("expand: periodic fixed point, G_q-rational truncation, rho word")
{
    auto c4 = FieldContext::create(4);
    FieldElem alpha = c4->from_rational(Rat(3, 5));
    // x = 1 - sqrt(2): digits (-1:2) repeating
    FieldElem x = c4->one() - c4->lambda();
    auto e = expand(RealInput::exact(x), alpha, 6);
    REQUIRE(e.digits.size() == 6);
    for (const auto& g : e.digits) CHECK(g == Digit{-1, Int(2)});
    CHECK(!e.truncated);

    // lambda/2 is G_q-rational: the orbit hits zero
    auto t = expand(RealInput::exact(c4->lambda() / Rat(2)), alpha, 10);
    CHECK(t.truncated);

    // odd q=5, alpha > rho/lambda: rho = [overline{+1:1,(-1:1)^h}], h = 1
    auto c5 = FieldContext::create(5);
    FieldElem a5 = c5->from_rational(Rat(13, 25));
    auto er = expand(RealInput::exact(c5->rho()), a5, 6);
    REQUIRE(er.digits.size() == 6);
    for (std::size_t i = 0; i < er.digits.size(); ++i)
        CHECK(er.digits[i] == (i % 2 == 0 ? Digit{1, Int(1)} : Digit{-1, Int(1)}));
}

TEST_CASE("convergents: values and unimodularity")
{
    auto c4 = FieldContext::create(4);
    FieldElem alpha = c4->from_rational(Rat(1, 2));

    std::vector<Digit> single{{-1, Int(3)}};
    auto cs = convergents(single, c4);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].p / cs[0].q_den == c4->from_int(-1) / (c4->lambda() * Rat(3)));

    // a long word off a random rational start: |det| = 1, q_den > 0, and the
    // matrix value agrees with the recurrence value
    FieldElem x = c4->from_rational(parse_rational("0.2718")); // generic start
    auto e = expand(RealInput::exact(x), alpha, 50);
    REQUIRE(e.digits.size() == 50);
    auto cv = convergents(e.digits, c4);
    Mat2 m = value_matrix(e.digits, c4);
    FieldElem det = m.det();
    CHECK((det * det) == c4->one());
    for (const auto& c : cv) CHECK(c.q_den.sign() > 0);
    CHECK(m.b * cv.back().q_den == m.d * cv.back().p);

    // q=4: (-1:2)^k converges to 1 - sqrt(2)
    auto r10 = realize(DigitWord{repeat({{-1, Int(2)}}, 10), {}}, c4);
    REQUIRE(r10.exact.has_value());
    FieldElem lim = c4->one() - c4->lambda();
    CHECK((*r10.exact - lim).enclosure(16).abs().hi_rat() < Rat(1, 1000));
}

TEST_CASE("theta formulas agree along orbits (cross-formula identity)")
{
    auto c4 = FieldContext::create(4);
    FieldElem alpha = c4->from_rational(Rat(1, 2));
    FieldElem x = c4->from_rational(parse_rational("0.3141"));
    int n = 12;
    auto orbit = exact_orbit(x, alpha, n + 1);
    auto e = expand(RealInput::exact(x), alpha, n + 1);
    auto cv = convergents(e.digits, c4);

    for (int i = 1; i <= n; ++i) {
        int eps_next = orbit[i].g.eps; // digit consumed at step i+1 is orbit[i].g? see below
        // orbit[i-1] holds (t_i, v_i); the next digit's sign is that of t_i
        const FieldElem& t = orbit[i - 1].t;
        const FieldElem& v = orbit[i - 1].v;
        eps_next = t.sign();
        auto [th_prev, th_cur] = theta_from_tv(t, v, eps_next);
        FieldElem d_cur = theta_direct(x, cv[i - 1]);                   // Theta_i
        CHECK(th_cur == d_cur);
        if (i >= 2) {
            FieldElem d_prev = theta_direct(x, cv[i - 2]);
            CHECK(th_prev == d_prev);
        } else {
            // Theta_0 = |x|
            CHECK(th_prev == (x.sign() < 0 ? -x : x));
        }
    }
}

TEST_CASE("theta special values at fixed points")
{
    // even fixed point (-1/(L+1), L-1), eps = -1
    auto c6 = FieldContext::create(6);
    FieldElem lam = c6->lambda();
    FieldElem t = -(c6->one() / (lam + Rat(1)));
    FieldElem v = lam - Rat(1);
    auto [tp, tc] = theta_from_tv(t, v, -1);
    CHECK(tp == (lam * lam - Rat(1)) / Rat(2));
    CHECK(tc == c6->from_rational(Rat(1, 2)));

    // v = 0: empty past
    auto [tp0, tc0] = theta_from_tv(t, c6->zero(), -1);
    CHECK(tp0.is_zero());

    // odd fixed point (-rho/(1+L rho), L-rho): Theta_n = H_q
    auto c5 = FieldContext::create(5);
    FieldElem rho = c5->rho(), lam5 = c5->lambda();
    FieldElem t5 = -rho / (c5->one() + lam5 * rho);
    FieldElem v5 = lam5 - rho;
    auto [tp5, tc5] = theta_from_tv(t5, v5, -1);
    CHECK(tc5 == c5->hurwitz());

    CHECK_THROWS_AS(theta_from_tv(c5->from_int(-2), c5->from_int(1), 1), arithmetic_error);
}

TEST_CASE("theta_next: closed form, substitution, chain identity")
{
    auto c4 = FieldContext::create(4);
    FieldElem lam = c4->lambda();
    // q=4, d=2, eps1=eps2=-1: -(1+2*sqrt2*t)(2*sqrt2 - v)/(1+tv)
    FieldElem t = c4->from_rational(Rat(-2, 5)), v = c4->from_rational(Rat(1, 2));
    FieldElem got = theta_next(t, v, Int(2), -1, -1);
    FieldElem expect = -(c4->one() + Rat(2) * lam * t) * (Rat(2) * lam - v) / (t * v + Rat(1));
    CHECK(got == expect);

    // t = 0 substitution
    CHECK(theta_next(c4->zero(), v, Int(3), 1, -1) ==
          -(lam * Rat(3) + v));

    // chain identity along an orbit: theta_next(t_n, v_n, d_{n+1}, e_{n+1}, e_{n+2})
    // equals Theta_n evaluated at the next point
    FieldElem alpha = c4->from_rational(Rat(3, 5));
    FieldElem x = c4->from_rational(parse_rational("0.417"));
    auto orbit = exact_orbit(x, alpha, 14);
    for (int i = 1; i + 2 < 14; ++i) {
        const FieldElem& tn = orbit[i - 1].t;
        const FieldElem& vn = orbit[i - 1].v;
        Digit g1 = orbit[i].g;     // (eps_{n+1}, d_{n+1})
        int eps2 = orbit[i + 1].g.eps;
        FieldElem lhs = theta_next(tn, vn, g1.d, g1.eps, eps2);
        auto [p2, c2] = theta_from_tv(orbit[i].t, orbit[i].v, eps2);
        (void)p2;
        CHECK(lhs == c2);
    }
}

TEST_CASE("B_n relations hold exactly")
{
    for (int q : {6, 8, 10}) {
        auto ctx = FieldContext::create(q);
        int p = q / 2;
        FieldElem lam = ctx->lambda();
        CHECK(b_seq(p - 1, ctx) == b_seq(p + 1, ctx));
        CHECK(b_seq(p - 1, ctx) == lam / Rat(2) * b_seq(p, ctx));
        CHECK(b_seq(p - 2, ctx) == (lam * lam / Rat(2) - Rat(1)) * b_seq(p, ctx));
        CHECK(b_seq(q, ctx).is_zero());
    }
    for (int q : {5, 7, 9}) {
        auto ctx = FieldContext::create(q);
        int h = (q - 3) / 2;
        FieldElem lam = ctx->lambda();
        CHECK(b_seq(h + 1, ctx) == b_seq(h + 2, ctx));
        CHECK(b_seq(h, ctx) == (lam - Rat(1)) * b_seq(h + 1, ctx));
        if (h >= 1)
            CHECK(b_seq(h - 1, ctx) == (lam * lam - lam - Rat(1)) * b_seq(h + 1, ctx));
        CHECK(b_seq(q, ctx).is_zero());
    }
}

TEST_CASE("realize: periodic words and round trips")
{
    auto c4 = FieldContext::create(4);
    // [overline{(-1:2)}] = 1 - sqrt(2)
    auto r = realize(parse_word("[|(-1:2)]"), c4);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == c4->one() - c4->lambda());

    // [overline{(-1:2),(-1:1)^(p-2)}] = -1/(L+1) for even q
    for (int q : {6, 8}) {
        auto ctx = FieldContext::create(q);
        std::vector<Digit> w{{-1, Int(2)}};
        auto tail = repeat({{-1, Int(1)}}, q / 2 - 2);
        w.insert(w.end(), tail.begin(), tail.end());
        auto rr = realize(DigitWord{{}, w}, ctx);
        REQUIRE(rr.exact.has_value());
        CHECK(*rr.exact == -(ctx->one() / (ctx->lambda() + Rat(1))));
    }

    // odd: [overline{+1:1,(-1:1)^h}] = rho
    for (int q : {5, 7}) {
        auto ctx = FieldContext::create(q);
        std::vector<Digit> w{{1, Int(1)}};
        auto tail = repeat({{-1, Int(1)}}, (q - 3) / 2);
        w.insert(w.end(), tail.begin(), tail.end());
        auto rr = realize(DigitWord{{}, w}, ctx);
        REQUIRE(rr.exact.has_value());
        CHECK(*rr.exact == ctx->rho());
    }

    CHECK_THROWS_AS(realize(DigitWord{}, c4), parameter_error);

    // realize . expand is the identity on an eventually periodic input
    FieldElem alpha = c4->from_rational(Rat(3, 5));
    auto fix = realize(parse_word("[|(-1:2)]"), c4);
    auto back = expand(RealInput::exact(*fix.exact), alpha, 4);
    CHECK(back.digits == repeat({{-1, Int(2)}}, 4));

    // ball route recovers a finite word's value within the radius
    FieldElem x = c4->from_rational(Rat(3, 10));
    auto e = expand(RealInput::exact(x), c4->from_rational(Rat(1, 2)), 20);
    auto fin = realize(DigitWord{e.digits, {}}, c4, 64);
    Interval dx = fin.ball - x.enclosure(128);
    CHECK(dx.abs().hi_rat() < Rat(1, Int(1) << 40));
}

TEST_CASE("digit word serialization round-trips bit-exactly")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(1, 12), dd(1, 30), coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        DigitWord w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.pre.push_back({coin(rng) ? 1 : -1, Int(dd(rng))});
        if (coin(rng)) {
            int m = len(rng);
            for (int i = 0; i < m; ++i) w.per.push_back({coin(rng) ? 1 : -1, Int(dd(rng))});
        }
        CHECK(parse_word(format_word(w)) == w);
    }
    CHECK(format_word(parse_word("(-1:2)(+1:1)^3")) == "(-1:2)(+1:1)^3");
    CHECK(format_word(parse_word("[(+1:2)|(-1:1)^2(+1:3)]")) == "[(+1:2)|(-1:1)^2(+1:3)]");
    CHECK_THROWS_AS(parse_word("(-2:1)"), parameter_error);
}
