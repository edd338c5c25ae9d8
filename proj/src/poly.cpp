#include "rosen/poly.hpp"

#include <numeric>

#include "rosen/errors.hpp"

namespace rosen {

QPoly qp_trim(QPoly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qp_add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qp_trim(std::move(r));
}

QPoly qp_sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qp_trim(std::move(r));
}

QPoly qp_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return qp_trim(std::move(r));
}

QPoly qp_scale(const QPoly& a, const Rat& c)
{
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b)
{
    if (b.empty()) throw arithmetic_error("polynomial division by zero");
    QPoly rem = a, quot;
    int db = qp_deg(b);
    if (qp_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rat(0));
    while (qp_deg(rem) >= db) {
        int k = qp_deg(rem) - db;
        Rat c = rem.back() / b.back();
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        rem = qp_trim(std::move(rem));
    }
    return {qp_trim(std::move(quot)), std::move(rem)};
}

Interval qp_eval(const QPoly& p, const Interval& x)
{
    Interval acc(x.precision());
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + Interval::from_rat(*it, x.precision());
    return acc;
}

Rat qp_eval(const QPoly& p, const Rat& x)
{
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat qp_resultant(QPoly a, QPoly b)
{
    a = qp_trim(std::move(a));
    b = qp_trim(std::move(b));
    if (a.empty() || b.empty()) return Rat(0);
    Rat res(1);
    while (true) {
        int da = qp_deg(a), db = qp_deg(b);
        if (db == 0) {
            Rat lc = b[0], p(1);
            for (int i = 0; i < da; ++i) p *= lc;
            return res * p;
        }
        auto [q, r] = qp_divmod(a, b);
        (void)q;
        if (r.empty()) return Rat(0);
        int dr = qp_deg(r);
        // res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b,r)
        Rat lc = b.back(), p(1);
        for (int i = 0; i < da - dr; ++i) p *= lc;
        if ((da % 2) && (db % 2)) res = -res;
        res *= p;
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly cyclotomic(int n)
{
    if (n < 1) throw parameter_error("cyclotomic index must be positive");
    // x^n - 1 divided by the cyclotomics of all proper divisors
    QPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = qp_divmod(num, cyclotomic(d));
        if (!r.empty()) throw internal_error("cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

QPoly cos_minpoly(int q)
{
    if (q < 3) throw parameter_error("q must be >= 3");
    QPoly phi = cyclotomic(2 * q);
    int deg = qp_deg(phi);
    if (deg % 2 != 0) throw internal_error("Phi_2q has odd degree");
    int m = deg / 2;
    for (int i = 0; i <= deg; ++i)
        if (phi[i] != phi[deg - i]) throw internal_error("Phi_2q not palindromic");

    // P(x)/x^m = c_m + sum_{k>=1} c_{m+k} (x^k + x^-k) and
    // x^k + x^-k = C_k(y) with C_0 = 2, C_1 = y, C_k = y C_{k-1} - C_{k-2}.
    QPoly psi = {phi[m]};
    QPoly prev = {Rat(2)}, cur = {Rat(0), Rat(1)}; // C_0, C_1
    for (int k = 1; k <= m; ++k) {
        psi = qp_add(psi, qp_scale(cur, phi[m + k]));
        QPoly next = qp_sub(qp_mul(QPoly{Rat(0), Rat(1)}, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    psi = qp_trim(std::move(psi));
    if (qp_deg(psi) != m || psi.back() != 1)
        throw internal_error("cos minpoly construction failed (degree/monicity)");
    // sanity: it vanishes on an enclosure of 2cos(pi/q)
    Interval lam = Interval::two_cos_pi_over(q, 256);
    if (!qp_eval(psi, lam).contains_zero())
        throw internal_error("cos minpoly does not vanish at 2cos(pi/q)");
    return psi;
}

} // namespace rosen
