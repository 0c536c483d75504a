#pragma once
// Decimal conversion for BigInt / BigFloat.

#include <string>
#include <string_view>
#include <variant>

#include "apc/bignum/bigfloat.hpp"
#include "apc/bignum/bigint.hpp"

namespace apc {

// Round-half-up to at most `digits` significant digits. Trailing
// fractional zeros and a trailing point are stripped. Fixed notation is
// used for decimal exponents in [-5, digits); scientific ("1.5e+20")
// otherwise.
std::string format_decimal(const BigFloat& x, std::uint32_t digits);
// Integers print exactly.
std::string format_decimal(const BigInt& x);

// Parses [-]digits[.digits][(e|E)[+|-]digits]. A literal with neither a
// point nor an exponent is an exact BigInt; anything else is the nearest
// BigFloat at ctx. Throws SyntaxError with the offending offset.
std::variant<BigInt, BigFloat> parse_decimal(std::string_view literal,
                                             const PrecisionContext& ctx);

// Significant decimal digits needed to round-trip `bits` binary digits.
std::uint32_t round_trip_digits(std::uint64_t bits);

}  // namespace apc
