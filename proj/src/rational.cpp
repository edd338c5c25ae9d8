#include "rosen/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace rosen {

Rat parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parameter_error("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw parameter_error("bad rational literal: " + text);
        r.canonicalize();
        return r;
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }

    std::string digits;
    long frac_len = 0, exp10 = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.') {
            if (seen_dot) throw parameter_error("bad rational literal: " + text);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exp10 = std::strtol(s.c_str() + i + 1, nullptr, 10);
            break;
        } else {
            throw parameter_error("bad rational literal: " + text);
        }
    }
    if (!seen_digit) throw parameter_error("bad rational literal: " + text);

    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0)
        throw parameter_error("bad rational literal: " + text);
    if (neg) num = -num;
    Rat r(num);
    long shift = exp10 - frac_len;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        r *= Rat(pow10);
    else
        r /= Rat(pow10);
    r.canonicalize();
    return r;
}

std::string rat_decimal(const Rat& r, int digits)
{
    if (digits < 0) digits = 0;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = r * Rat(pow10);
    // round half away from zero
    Int rounded;
    if (scaled >= 0)
        rounded = rat_floor(scaled + Rat(1, 2));
    else
        rounded = -rat_floor(-scaled + Rat(1, 2));
    bool neg = rounded < 0;
    Int mag = neg ? Int(-rounded) : rounded;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = neg ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

} // namespace rosen
