#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace repfn {

// All representation counts and coefficients are exact integers of
// unbounded magnitude. Fixed-width fast paths exist only behind proven
// capacity bounds.
using BigInt = boost::multiprecision::cpp_int;

// C(n, r) for r >= 0; 0 when r > n.
BigInt binomial(const BigInt& n, std::uint64_t r);
BigInt binomial(std::uint64_t n, std::uint64_t r);

// Coefficient of x^n in 1/(1-x)^m, i.e. C(n+m-1, m-1). Requires m >= 1.
BigInt binomial_series_coeff(std::uint64_t m, std::uint64_t n);

BigInt factorial(std::uint64_t n);

BigInt pow_big(const BigInt& base, std::uint64_t exponent);

std::string to_decimal(const BigInt& v);

// Strict decimal parse ([-]digits); throws Error::Code::Parse otherwise.
BigInt parse_decimal(std::string_view text);

inline BigInt from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

} // namespace repfn
