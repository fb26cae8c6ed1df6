#include "finrr/divisor.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace finrr {

namespace {

void require_same_length(const Divisor& a, const Divisor& b, const char* op) {
    if (a.size() != b.size())
        throw LengthMismatch(std::string(op) + ": divisor lengths " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

bool operator<(const Divisor& a, const Divisor& b) {
    return std::lexicographical_compare(a.comps_.begin(), a.comps_.end(),
                                        b.comps_.begin(), b.comps_.end());
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    require_same_length(a, b, "operator+");
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.comps_[i] + b.comps_[i];
    return Divisor(std::move(r));
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    require_same_length(a, b, "operator-");
    std::vector<Rational> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.comps_[i] - b.comps_[i];
    return Divisor(std::move(r));
}

Divisor Divisor::operator-() const {
    std::vector<Rational> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -comps_[i];
    return Divisor(std::move(r));
}

Divisor operator*(const Rational& c, const Divisor& x) {
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x.comps_[i];
    return Divisor(std::move(r));
}

std::string Divisor::str() const {
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ',';
        out += comps_[i].str();
    }
    return out;
}

Divisor Divisor::parse(const std::string& text) {
    std::vector<Rational> comps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        comps.push_back(Rational::parse(trim(tok)));
    if (comps.empty()) throw ParseError("empty divisor: '" + text + "'");
    return Divisor(std::move(comps));
}

Rational degree(const Divisor& x) {
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i];
    return s;
}

Divisor positive_part(const Divisor& x) {
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].sign() > 0) r[i] = x[i];
    return Divisor(std::move(r));
}

Divisor negative_part(const Divisor& x) {
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].sign() < 0) r[i] = x[i];
    return Divisor(std::move(r));
}

Rational taxicab(const Divisor& x, const Divisor& y) {
    require_same_length(x, y, "taxicab");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) s += abs(x[i] - y[i]);
    return s;
}

bool leq(const Divisor& x, const Divisor& y) {
    require_same_length(x, y, "leq");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] < x[i]) return false;
    return true;
}

Rational inf_norm(const Divisor& x) {
    Rational m;
    for (std::size_t i = 0; i < x.size(); ++i) m = max(m, abs(x[i]));
    return m;
}

Divisor zero_divisor(std::size_t n) { return Divisor(n); }

std::ostream& operator<<(std::ostream& os, const Divisor& x) {
    return os << x.str();
}

} // namespace finrr
