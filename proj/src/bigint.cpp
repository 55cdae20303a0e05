#include "bigint.hpp"

#include "errors.hpp"

namespace repfn {

BigInt binomial(const BigInt& n, std::uint64_t r) {
    if (n < 0) raise(Error::Code::InvalidArgument, "binomial: negative n");
    if (BigInt(r) > n) return 0;
    // Multiply/divide incrementally; every intermediate quotient is exact.
    BigInt acc = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
    return binomial(BigInt(n), r);
}

BigInt binomial_series_coeff(std::uint64_t m, std::uint64_t n) {
    if (m < 1) raise(Error::Code::InvalidArgument, "binomial_series_coeff: m must be >= 1");
    return binomial(BigInt(n) + (m - 1), m - 1);
}

BigInt factorial(std::uint64_t n) {
    BigInt acc = 1;
    for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
    BigInt acc = 1;
    BigInt b = base;
    std::uint64_t e = exponent;
    while (e != 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string to_decimal(const BigInt& v) {
    return v.str();
}

BigInt parse_decimal(std::string_view text) {
    if (text.empty()) raise(Error::Code::Parse, "empty integer literal");
    std::size_t pos = text[0] == '-' ? 1 : 0;
    if (pos == text.size()) raise(Error::Code::Parse, "sign without digits");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            raise(Error::Code::Parse, "invalid integer literal: " + std::string(text));
        }
    }
    return BigInt(std::string(text));
}

} // namespace repfn
