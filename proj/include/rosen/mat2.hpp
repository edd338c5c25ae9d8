#pragma once

#include "rosen/numfield.hpp"
#include "rosen/words.hpp"

namespace rosen {

// 2x2 matrix over K_q acting as a Moebius transformation; M and -M act
// identically.  Generators S = [[1,L],[0,1]] and T = [[0,-1],[1,0]].
struct Mat2 {
    FieldElem a, b, c, d;

    static Mat2 identity(const FieldCtxPtr& ctx);
    static Mat2 gen_S(const FieldCtxPtr& ctx);
    static Mat2 gen_T(const FieldCtxPtr& ctx);
    // the one-step matrix A with T_alpha(t) = A(t) on the (eps, d) cell:
    // [[-d L, eps],[1, 0]]
    static Mat2 step_matrix(const Digit& g, const FieldCtxPtr& ctx);

    Mat2 operator*(const Mat2& o) const;
    FieldElem det() const { return a * d - b * c; }
    // adjugate; equals the inverse up to the scalar det (projectively equal)
    Mat2 adjugate() const;
    // conjugation by T: the past-coordinate action of Lemma-style rounds
    Mat2 t_conj() const;
    Mat2 pow(int n) const;

    FieldElem apply(const FieldElem& x) const;
    Interval apply(const Interval& x, long bits) const;

    // projective equality: entries proportional by a nonzero field scalar
    bool projectively_equal(const Mat2& o) const;
};

Mat2 word_matrix(const std::vector<Digit>& w, const FieldCtxPtr& ctx);

} // namespace rosen
