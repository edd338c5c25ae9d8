#pragma once

#include <optional>
#include <vector>

#include "rosen/interval.hpp"
#include "rosen/mat2.hpp"
#include "rosen/numfield.hpp"
#include "rosen/words.hpp"

namespace rosen {

// Real input under one of the two numeric kernels: exact K_q element, or an
// outward-rounded ball.  Ball operations refuse to decide across cell
// boundaries (precision_error); the caller refines and retries.
class RealInput {
public:
    static RealInput exact(FieldElem x);
    static RealInput ball(Interval x, FieldCtxPtr ctx);

    bool is_exact() const { return exact_.has_value(); }
    const FieldElem& exact_value() const;
    const Interval& ball_value() const;
    const FieldCtxPtr& context() const { return ctx_; }
    double to_double() const;

private:
    FieldCtxPtr ctx_;
    std::optional<FieldElem> exact_;
    std::optional<Interval> ball_;
};

// digit cell boundary delta_d = 1/((alpha + d) lambda)
FieldElem cell_boundary(const FieldElem& alpha, long d);

// alpha-Rosen digit of x: (sgn x, floor(|1/(L x)| + 1 - alpha)).
// check_range enforces x in [(alpha-1)L, alpha L).
Digit rosen_digit(const FieldElem& x, const FieldElem& alpha, bool check_range = true);
Digit rosen_digit(const Interval& x, const FieldElem& alpha, const FieldCtxPtr& ctx);
Digit rosen_digit(const RealInput& x, const FieldElem& alpha);

// One application of T_alpha; T_alpha(0) = 0.
FieldElem rosen_step(const FieldElem& x, const FieldElem& alpha, bool check_range = true);
Interval rosen_step(const Interval& x, const FieldElem& alpha, const FieldCtxPtr& ctx);
RealInput rosen_step(const RealInput& x, const FieldElem& alpha);

struct Expansion {
    std::vector<Digit> digits;
    bool truncated = false; // orbit reached 0 exactly (G_q-rational input)
};

// First n digits of the T_alpha-orbit of x.  Ball-kernel straddles throw
// precision_error naming the index reached.
Expansion expand(const RealInput& x, const FieldElem& alpha, std::size_t n);

struct Convergent {
    FieldElem p, q_den;
    std::size_t index = 0; // 1-based; index 0 is the empty convergent 0/1
};

// Convergents p_n/q_n of a digit word, via left products of the generator
// matrices [[0, eps],[1, d L]]; |det| = 1 throughout and q_den normalized
// positive.
std::vector<Convergent> convergents(const std::vector<Digit>& w, const FieldCtxPtr& ctx);

// Theta_n = q_n^2 |x - p_n/q_n|
FieldElem theta_direct(const FieldElem& x, const Convergent& c);
Interval theta_direct(const Interval& x, const Convergent& c, long bits);

// (Theta_{n-1}, Theta_n) from the plane point (t_n, v_n), eq. of Section 2:
// Theta_{n-1} = v/(1+tv), Theta_n = eps_{n+1} t/(1+tv); requires 1+tv > 0.
std::pair<FieldElem, FieldElem> theta_from_tv(const FieldElem& t, const FieldElem& v, int eps_next);
std::pair<Interval, Interval> theta_from_tv(const Interval& t, const Interval& v, int eps_next);

// Theta_{n+1} in terms of (t_n, v_n) and d_{n+1}, eps_{n+1}, eps_{n+2}
FieldElem theta_next(const FieldElem& t, const FieldElem& v, const Int& d, int eps1, int eps2);

// B_0 = 0, B_1 = 1, B_n = L B_{n-1} - B_{n-2}
FieldElem b_seq(long n, const FieldCtxPtr& ctx);

// CF value matrix of a word: product over digits of [[0, eps],[1, d L]];
// the word value is M(0) = p/q_den.
Mat2 value_matrix(const std::vector<Digit>& w, const FieldCtxPtr& ctx);

struct Realized {
    std::optional<FieldElem> exact; // present when the value lies in K_q
    Interval ball;                  // always valid
};

// Evaluates a finite or eventually periodic word.  Periodic words solve the
// Moebius fixed-point quadratic and select the attracting root; roots in a
// proper quadratic extension of K_q come back ball-only.
Realized realize(const DigitWord& w, const FieldCtxPtr& ctx, long bits = 256);

} // namespace rosen
