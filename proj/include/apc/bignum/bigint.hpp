#pragma once
// Signed arbitrary-precision integer.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apc/bignum/natural.hpp"

namespace apc {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
    BigInt(int sign, detail::Natural magnitude);

    // Optional leading '-', then decimal digits. Throws SyntaxError.
    static BigInt parse(std::string_view text);

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_negative() const noexcept { return sign_ < 0; }
    const detail::Natural& magnitude() const noexcept { return mag_; }
    // Magnitude limbs, most significant first.
    std::vector<std::uint32_t> limbs() const;
    std::uint64_t bit_length() const noexcept { return mag_.bit_length(); }

    bool fits_i64() const noexcept;
    std::int64_t to_i64() const;  // RangeError when out of range
    double to_double() const;     // round to nearest

    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncating division (C semantics); DivisionByZero on b == 0.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
    static BigInt pow(const BigInt& base, std::uint64_t exp);

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept;
    friend bool operator==(const BigInt& a, const BigInt& b) noexcept = default;

private:
    int sign_ = 0;
    detail::Natural mag_;
};

}  // namespace apc
