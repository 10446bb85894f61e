#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lq {

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator; every arithmetic operation is exact. No floating point is
/// used anywhere a structural property gets decided.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p" or "p/q" with decimal integers, optional leading '-' on p.
/// Rejects everything else (decimals, signs on q, q == 0, whitespace).
Rat parse_rat(std::string_view text);

/// Renders in lowest terms as "p" or "p/q" (q > 1 only when needed).
std::string rat_str(const Rat& value);

inline Rat rat_div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return a / b;
}

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
void add_scaled(Vec& acc, const Rat& c, const Vec& v);
std::string vec_str(const Vec& v);

}  // namespace lq
