#include "rosen/words.hpp"

#include <cctype>
#include <sstream>

#include "rosen/errors.hpp"

namespace rosen {

std::string format_digits(const std::vector<Digit>& w)
{
    std::ostringstream os;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        os << "(" << (w[i].eps > 0 ? "+1" : "-1") << ":" << w[i].d.get_str() << ")";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string format_word(const DigitWord& w)
{
    if (!w.periodic()) return format_digits(w.pre);
    return "[" + format_digits(w.pre) + "|" + format_digits(w.per) + "]";
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void expect(char c)
    {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw parameter_error("bad digit word near position " + std::to_string(i));
        ++i;
    }
};

Int parse_uint(Cursor& c)
{
    c.skip_ws();
    std::string num;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) num += c.s[c.i++];
    if (num.empty()) throw parameter_error("expected a number in digit word");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), num.c_str(), 10) != 0)
        throw parameter_error("bad number in digit word");
    return v;
}

std::vector<Digit> parse_digits(Cursor& c, const char* stoppers)
{
    std::vector<Digit> out;
    while (!c.eof()) {
        char p = c.peek();
        bool stop = false;
        for (const char* s = stoppers; *s; ++s)
            if (p == *s) stop = true;
        if (stop) break;
        c.expect('(');
        c.skip_ws();
        int eps = 0;
        if (c.peek() == '+') { c.expect('+'); eps = 1; }
        else if (c.peek() == '-') { c.expect('-'); eps = -1; }
        else throw parameter_error("digit sign must be +1 or -1");
        Int one = parse_uint(c);
        if (one != 1) throw parameter_error("digit sign must be +1 or -1");
        c.expect(':');
        Int d = parse_uint(c);
        if (d < 1) throw parameter_error("digit must be >= 1");
        c.expect(')');
        long k = 1;
        if (c.peek() == '^') {
            c.expect('^');
            Int reps = parse_uint(c);
            if (reps < 1 || reps > 1000000) throw parameter_error("unreasonable repetition count");
            k = reps.get_si();
        }
        for (long r = 0; r < k; ++r) out.push_back(Digit{eps, d});
    }
    return out;
}

} // namespace

DigitWord parse_word(const std::string& text)
{
    Cursor c{text};
    DigitWord w;
    if (c.peek() == '[') {
        c.expect('[');
        w.pre = parse_digits(c, "|");
        c.expect('|');
        w.per = parse_digits(c, "]");
        c.expect(']');
        if (w.per.empty()) throw parameter_error("periodic word needs a nonempty period");
    } else {
        w.pre = parse_digits(c, "");
    }
    if (!c.eof()) throw parameter_error("trailing input in digit word");
    return w;
}

} // namespace rosen
