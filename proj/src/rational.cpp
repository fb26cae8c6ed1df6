#include "finrr/rational.hpp"

#include <cctype>
#include <ostream>

namespace finrr {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational: '" + text + "'");
    Int n(num), d(den);
    if (d == 0) throw ParseError("invalid rational (zero denominator): '" + text + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace finrr
