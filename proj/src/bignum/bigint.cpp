#include "apc/bignum/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apc/bignum/bigfloat.hpp"
#include "apc/errors.hpp"

namespace apc {

using detail::Natural;

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t mag = v < 0 ? std::uint64_t(-(v + 1)) + 1u : std::uint64_t(v);
    mag_ = Natural(mag);
}

BigInt::BigInt(int sign, Natural magnitude) : mag_(std::move(magnitude)) {
    sign_ = mag_.is_zero() ? 0 : (sign < 0 ? -1 : 1);
}

BigInt BigInt::parse(std::string_view text) {
    bool neg = false;
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw SyntaxError("expected digits in integer literal", {1, i + 1, i});
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw SyntaxError("unexpected character '" + std::string(1, text[k]) +
                                  "' in integer literal",
                              {1, k + 1, k});
        }
    }
    return BigInt(neg ? -1 : 1, Natural::from_decimal(text.substr(i)));
}

std::vector<std::uint32_t> BigInt::limbs() const {
    auto le = mag_.limbs_le();
    return {le.rbegin(), le.rend()};
}

bool BigInt::fits_i64() const noexcept {
    if (mag_.bit_length() < 64) return true;
    return sign_ < 0 && mag_.bit_length() == 64 && mag_.low_u64() == (std::uint64_t(1) << 63);
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) fail(ErrorKind::Range, "integer " + to_string() + " exceeds 64-bit range");
    std::uint64_t m = mag_.low_u64();
    if (sign_ < 0) return std::int64_t(~m + 1);
    return std::int64_t(m);
}

double BigInt::to_double() const {
    return downcast_double(*this);
}

std::string BigInt::to_string() const {
    std::string s = mag_.to_decimal();
    if (sign_ < 0) s.insert(s.begin(), '-');
    return s;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt(a.sign_, a.mag_ + b.mag_);
    auto c = a.mag_ <=> b.mag_;
    if (c == 0) return {};
    if (c > 0) return BigInt(a.sign_, a.mag_ - b.mag_);
    return BigInt(b.sign_, b.mag_ - a.mag_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    return BigInt(a.sign_ * b.sign_, a.mag_ * b.mag_);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    auto [q, r] = Natural::divmod(a.mag_, b.mag_);
    quot = BigInt(a.sign_ * b.sign_, std::move(q));
    rem = BigInt(a.sign_, std::move(r));
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t exp) {
    if (exp == 0) return BigInt(1);
    int sign = base.sign_;
    if (sign < 0 && (exp % 2 == 0)) sign = 1;
    return BigInt(sign, Natural::pow(base.mag_, exp));
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    auto c = a.mag_ <=> b.mag_;
    if (a.sign_ < 0) return 0 <=> c;
    return c;
}

}  // namespace apc
