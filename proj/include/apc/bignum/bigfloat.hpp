#pragma once
// Multiple-precision binary floating point.
//
// value = (-1)^sign * 0.L[0]L[1]...L[w-1] * 2^exponent, where L are 32-bit
// limbs stored most significant first and the top bit of L[0] is set. The
// limb count is fixed by the context in force when the value was produced.
// There are no infinities or NaNs: overflow and invalid operations throw.

#include <compare>
#include <cstdint>
#include <vector>

#include "apc/bignum/bigint.hpp"
#include "apc/bignum/context.hpp"
#include "apc/bignum/natural.hpp"

namespace apc {

class BigFloat {
public:
    // Canonical zero.
    BigFloat() = default;

    static BigFloat from_int(const BigInt& v, const PrecisionContext& ctx);
    static BigFloat from_int(std::int64_t v, const PrecisionContext& ctx) {
        return from_int(BigInt(v), ctx);
    }
    // Rounded to ctx (exact whenever ctx.bits() >= 53).
    static BigFloat from_double(double v, const PrecisionContext& ctx);

    // Rounds sign * (mag + sticky*epsilon) * 2^lsb_exp to bits significant
    // bits, ties to even. "sticky" marks a discarded non-zero tail strictly
    // below the lowest bit of mag. The result holds ceil(bits/32) limbs.
    static BigFloat round_from(bool negative, detail::Natural mag, std::int64_t lsb_exp,
                               std::uint64_t bits, bool sticky = false);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    std::int64_t exponent() const noexcept { return exponent_; }
    std::uint32_t words() const noexcept { return std::uint32_t(limbs_.size()); }
    std::uint64_t bits() const noexcept { return 32ull * limbs_.size(); }
    const std::vector<std::uint32_t>& limbs() const noexcept { return limbs_; }

    // Integer significand M with value = M * 2^lsb_exponent().
    detail::Natural significand() const;
    std::int64_t lsb_exponent() const noexcept { return exponent_ - std::int64_t(bits()); }

    BigFloat operator-() const;
    BigFloat abs() const;

    // Rounded copy at another precision.
    BigFloat rounded(const PrecisionContext& ctx) const;
    // Exact scaling by 2^k.
    BigFloat ldexp(std::int64_t k) const;

    bool is_integer() const;
    // Truncation toward zero.
    BigInt trunc() const;
    // Nearest integer, ties away from zero.
    BigInt round_integer() const;
    double to_double() const;

    friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, const BigFloat& b) = default;

private:
    bool negative_ = false;
    std::int64_t exponent_ = 0;
    std::vector<std::uint32_t> limbs_;  // empty for zero
};

// Correctly rounded (ties to even) arithmetic at ctx.bits().
BigFloat add(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx);
BigFloat sub(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx);
BigFloat mul(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx);
BigFloat div(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx);
BigFloat sqrt(const BigFloat& x, const PrecisionContext& ctx);
// a / d for a small positive integer d.
BigFloat div_small(const BigFloat& a, std::uint32_t d, const PrecisionContext& ctx);
BigFloat mul_small(const BigFloat& a, std::uint32_t m, const PrecisionContext& ctx);

// Nearest IEEE binary64 value. RangeError on overflow.
double downcast_double(const BigFloat& x);
double downcast_double(const BigInt& x);

// Exponent bound beyond which results raise RangeError.
inline constexpr std::int64_t kMaxExponent = std::int64_t(1) << 60;

}  // namespace apc
