#pragma once
// Unsigned multiple-precision magnitude built on 32-bit limbs.
//
// Limbs are stored least-significant first with no high zero limb; the
// empty vector is zero. This is the workhorse beneath BigInt and BigFloat
// and is not meant to be used by the interpreter directly.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace apc::detail {

using limb_t = std::uint32_t;
using dlimb_t = std::uint64_t;
inline constexpr unsigned kLimbBits = 32;

class Natural {
public:
    Natural() = default;
    explicit Natural(std::uint64_t v);
    static Natural from_limbs_le(std::vector<limb_t> limbs);

    bool is_zero() const noexcept { return d_.empty(); }
    std::size_t limb_count() const noexcept { return d_.size(); }
    std::span<const limb_t> limbs_le() const noexcept { return d_; }

    // 0 for zero.
    std::uint64_t bit_length() const noexcept;
    bool bit(std::uint64_t i) const noexcept;
    // True when any bit strictly below position i is set.
    bool any_below(std::uint64_t i) const noexcept;
    bool is_odd() const noexcept { return !d_.empty() && (d_[0] & 1u); }

    // Low 64 bits.
    std::uint64_t low_u64() const noexcept;
    // Top 64 bits (left-aligned), for estimates.
    double approx_double_scaled(std::int64_t& exp2) const noexcept;

    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept;
    friend bool operator==(const Natural& a, const Natural& b) noexcept = default;

    friend Natural operator+(const Natural& a, const Natural& b);
    // Requires a >= b.
    friend Natural operator-(const Natural& a, const Natural& b);
    friend Natural operator*(const Natural& a, const Natural& b);
    friend Natural operator<<(const Natural& a, std::uint64_t bits);
    friend Natural operator>>(const Natural& a, std::uint64_t bits);

    Natural& operator+=(const Natural& b) { return *this = *this + b; }
    Natural& operator-=(const Natural& b) { return *this = *this - b; }
    Natural& operator*=(const Natural& b) { return *this = *this * b; }

    Natural mul_small(limb_t m) const;
    Natural add_small(limb_t a) const;
    // Returns {quotient, remainder}.
    std::pair<Natural, limb_t> divmod_small(limb_t m) const;
    // Truncating division; divisor must be non-zero.
    static std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b);

    // floor(sqrt(a)).
    static Natural isqrt(const Natural& a);
    static Natural pow(const Natural& base, std::uint64_t exp);
    static Natural pow10(std::uint64_t exp);

    std::string to_decimal() const;
    // Digits only, no sign; caller validates.
    static Natural from_decimal(std::string_view digits);

private:
    void trim() noexcept;
    std::vector<limb_t> d_;
};

}  // namespace apc::detail
