#pragma once

#include <vector>

#include "rosen/interval.hpp"
#include "rosen/rational.hpp"

namespace rosen {

// Dense univariate polynomial over Q, coefficients low to high.  The zero
// polynomial is the empty vector; otherwise the leading coefficient is
// nonzero.
using QPoly = std::vector<Rat>;

QPoly qp_trim(QPoly p);
int qp_deg(const QPoly& p); // -1 for zero
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rat& c);
// division with remainder, b != 0
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
Interval qp_eval(const QPoly& p, const Interval& x);
Rat qp_eval(const QPoly& p, const Rat& x);

// res(a, b) = lc(b)^deg(a) * prod b-roots ... computed by the Euclidean
// recursion over Q; used for the Delta-is-not-a-square certificate.
Rat qp_resultant(QPoly a, QPoly b);

// n-th cyclotomic polynomial (integer coefficients).
QPoly cyclotomic(int n);

// Minimal polynomial of 2cos(pi/q) over Q: the y = x + 1/x transform of
// the palindromic Phi_{2q}, monic with integer coefficients, degree
// phi(2q)/2.  Verified to vanish on an enclosure of 2cos(pi/q).
QPoly cos_minpoly(int q);

} // namespace rosen
