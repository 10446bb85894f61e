#include "lq/rational.hpp"

#include <cctype>
#include <sstream>

namespace lq {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num, true))
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(num)));
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den, false))
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d.is_zero())
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(BigInt(std::string(num)), d);
}

std::string rat_str(const Rat& value) { return value.str(); }

bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec zero_vec(int n) { return Vec(size_t(n)); }

Vec unit_vec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v[size_t(i)] = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v);
    for (Rat& x : r) x *= c;
    return r;
}

void add_scaled(Vec& acc, const Rat& c, const Vec& v) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

std::string vec_str(const Vec& v) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].str();
    }
    out << ']';
    return out.str();
}

}  // namespace lq
