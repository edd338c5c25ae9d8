#pragma once

#include <string>
#include <vector>

#include "rosen/rational.hpp"

namespace rosen {

// One expansion step: sign and positive integer digit.
struct Digit {
    int eps = 1; // +1 or -1
    Int d = 1;   // >= 1

    bool operator==(const Digit& o) const { return eps == o.eps && d == o.d; }
    bool operator!=(const Digit& o) const { return !(*this == o); }
};

// Digit word, optionally eventually periodic.  An empty period means a
// plain finite word.
struct DigitWord {
    std::vector<Digit> pre;
    std::vector<Digit> per;

    bool periodic() const { return !per.empty(); }
    bool operator==(const DigitWord& o) const { return pre == o.pre && per == o.per; }
};

// Text form: "(-1:2)(+1:1)^3", periodic words as "[pre|per]" with either
// side possibly empty.  format/parse round-trip exactly.
std::string format_digits(const std::vector<Digit>& w);
std::string format_word(const DigitWord& w);
DigitWord parse_word(const std::string& text);

inline std::vector<Digit> repeat(const std::vector<Digit>& w, int k)
{
    std::vector<Digit> out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

} // namespace rosen
