#pragma once
// Real scalars (exact integer or float) and complex numbers built on them.
//
// Integer operands stay exact; a float operand anywhere promotes the other
// side to a float rounded at the current context. Integer division stays
// integral only when it is exact.

#include <compare>
#include <string>
#include <variant>

#include "apc/bignum/bigfloat.hpp"
#include "apc/bignum/bigint.hpp"
#include "apc/bignum/context.hpp"

namespace apc {

class Number {
public:
    Number() : v_(BigInt{}) {}
    Number(BigInt v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
    Number(BigFloat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Number(std::variant<BigInt, BigFloat> v) : v_(std::move(v)) {}  // NOLINT
    static Number integer(std::int64_t v) { return Number(BigInt(v)); }

    bool is_int() const noexcept { return std::holds_alternative<BigInt>(v_); }
    bool is_float() const noexcept { return !is_int(); }
    const BigInt& as_int() const { return std::get<BigInt>(v_); }
    const BigFloat& as_float() const { return std::get<BigFloat>(v_); }

    bool is_zero() const noexcept;
    int sign() const noexcept;
    // Integral value (an int, or a float with no fractional part).
    bool is_integral() const;
    // Exact integer value; TypeError when not integral.
    BigInt to_bigint() const;
    // Float rounded to ctx (integers converted, floats re-rounded).
    BigFloat to_float(const PrecisionContext& ctx) const;
    double to_double() const;

    Number operator-() const;
    Number abs() const;

    std::string format(std::uint32_t digits) const;

    // Exact numeric comparison across representations.
    friend std::strong_ordering compare(const Number& a, const Number& b);

private:
    std::variant<BigInt, BigFloat> v_;
};

Number add(const Number& a, const Number& b, const PrecisionContext& ctx);
Number sub(const Number& a, const Number& b, const PrecisionContext& ctx);
Number mul(const Number& a, const Number& b, const PrecisionContext& ctx);
Number div(const Number& a, const Number& b, const PrecisionContext& ctx);
// Integer exponents by repeated squaring; non-integral exponents need a
// positive base and go through exp/log.
Number pow(const Number& a, const Number& b, const PrecisionContext& ctx);

struct BigComplex {
    Number re;
    Number im;
};

BigComplex add(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx);
BigComplex sub(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx);
BigComplex mul(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx);
BigComplex div(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx);
// Integer exponent only.
BigComplex pow(const BigComplex& a, const BigInt& n, const PrecisionContext& ctx);
bool operator==(const BigComplex& a, const BigComplex& b);

}  // namespace apc
