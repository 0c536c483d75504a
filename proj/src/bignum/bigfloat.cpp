#include "apc/bignum/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "apc/errors.hpp"

namespace apc {

using detail::Natural;

void PrecisionContext::poll() const {
    if (interrupt && interrupt->load(std::memory_order_relaxed)) {
        fail(ErrorKind::Interrupted, "computation interrupted");
    }
}

namespace {

struct RoundedMag {
    Natural q;             // exactly `bits` significant bits
    std::int64_t lsb = 0;  // value = q * 2^lsb
};

// Round a non-zero magnitude to `bits` significant bits, ties to even.
RoundedMag round_mag(Natural mag, std::int64_t lsb, std::uint64_t bits, bool sticky) {
    std::uint64_t n = mag.bit_length();
    if (sticky && n <= bits + 1) {
        std::uint64_t pad = bits + 2 - n;
        mag = mag << pad;
        lsb -= std::int64_t(pad);
        n = bits + 2;
    }
    if (n <= bits) {
        std::uint64_t pad = bits - n;
        return {mag << pad, lsb - std::int64_t(pad)};
    }
    std::uint64_t drop = n - bits;
    Natural q = mag >> drop;
    bool half = mag.bit(drop - 1);
    bool rest = sticky || mag.any_below(drop - 1);
    if (half && (rest || q.is_odd())) {
        q = q.add_small(1);
        if (q.bit_length() > bits) {
            q = q >> 1;
            ++drop;
        }
    }
    return {std::move(q), lsb + std::int64_t(drop)};
}

void check_exponent(std::int64_t e) {
    if (e > kMaxExponent || e < -kMaxExponent) {
        fail(ErrorKind::Range, "floating-point exponent out of range");
    }
}

std::uint64_t limb_bits(std::uint64_t bits) { return (bits + 31) / 32 * 32; }

}  // namespace

BigFloat BigFloat::round_from(bool negative, Natural mag, std::int64_t lsb_exp,
                              std::uint64_t bits, bool sticky) {
    BigFloat r;
    if (mag.is_zero()) return r;
    RoundedMag rm = round_mag(std::move(mag), lsb_exp, bits, sticky);
    const std::uint64_t stored = limb_bits(bits);
    Natural full = rm.q << (stored - bits);
    r.negative_ = negative;
    r.exponent_ = rm.lsb + std::int64_t(bits);
    check_exponent(r.exponent_);
    auto le = full.limbs_le();
    r.limbs_.assign(le.rbegin(), le.rend());
    r.limbs_.resize(stored / 32, 0);  // never grows past stored bits
    return r;
}

BigFloat BigFloat::from_int(const BigInt& v, const PrecisionContext& ctx) {
    return round_from(v.is_negative(), v.magnitude(), 0, ctx.bits());
}

BigFloat BigFloat::from_double(double v, const PrecisionContext& ctx) {
    if (!std::isfinite(v)) fail(ErrorKind::Domain, "non-finite double cannot be converted");
    if (v == 0.0) return {};
    int e = 0;
    double frac = std::frexp(std::fabs(v), &e);
    auto m = static_cast<std::uint64_t>(std::ldexp(frac, 53));
    return round_from(v < 0, Natural(m), std::int64_t(e) - 53, ctx.bits());
}

Natural BigFloat::significand() const {
    return Natural::from_limbs_le(std::vector<std::uint32_t>(limbs_.rbegin(), limbs_.rend()));
}

BigFloat BigFloat::operator-() const {
    BigFloat r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r = *this;
    r.negative_ = false;
    return r;
}

BigFloat BigFloat::rounded(const PrecisionContext& ctx) const {
    if (is_zero() || words() == ctx.words) return *this;
    return round_from(negative_, significand(), lsb_exponent(), ctx.bits());
}

BigFloat BigFloat::ldexp(std::int64_t k) const {
    if (is_zero()) return *this;
    BigFloat r = *this;
    r.exponent_ += k;
    check_exponent(r.exponent_);
    return r;
}

bool BigFloat::is_integer() const {
    if (is_zero()) return true;
    std::int64_t lsb = lsb_exponent();
    if (lsb >= 0) return true;
    if (exponent_ <= 0) return false;
    return !significand().any_below(std::uint64_t(-lsb));
}

BigInt BigFloat::trunc() const {
    if (is_zero() || exponent_ <= 0) return {};
    std::int64_t lsb = lsb_exponent();
    Natural m = significand();
    m = lsb >= 0 ? (m << std::uint64_t(lsb)) : (m >> std::uint64_t(-lsb));
    return BigInt(negative_ ? -1 : 1, std::move(m));
}

BigInt BigFloat::round_integer() const {
    if (is_zero() || exponent_ < 0) return {};
    std::int64_t lsb = lsb_exponent();
    Natural m = significand();
    if (lsb >= 0) return BigInt(negative_ ? -1 : 1, m << std::uint64_t(lsb));
    std::uint64_t drop = std::uint64_t(-lsb);
    Natural q = m >> drop;
    if (m.bit(drop - 1)) q = q.add_small(1);
    return BigInt(negative_ ? -1 : 1, std::move(q));
}

double BigFloat::to_double() const { return downcast_double(*this); }

std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (a.sign() != b.sign()) return a.sign() <=> b.sign();
    if (a.is_zero()) return std::strong_ordering::equal;
    std::strong_ordering mag = std::strong_ordering::equal;
    if (a.exponent_ != b.exponent_) {
        mag = a.exponent_ <=> b.exponent_;
    } else {
        std::uint64_t wa = a.bits(), wb = b.bits();
        std::uint64_t w = std::max(wa, wb);
        mag = (a.significand() << (w - wa)) <=> (b.significand() << (w - wb));
    }
    return a.negative_ ? (0 <=> mag) : mag;
}

BigFloat add(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    if (a.is_zero()) return b.rounded(ctx);
    if (b.is_zero()) return a.rounded(ctx);
    const BigFloat* hi = &a;
    const BigFloat* lo = &b;
    if (b.exponent() > a.exponent()) std::swap(hi, lo);

    const std::int64_t bits = std::int64_t(ctx.bits());
    const std::int64_t hi_lsb = hi->lsb_exponent();
    const std::int64_t floor_pos = std::min(hi_lsb, hi->exponent() - bits - 6);

    Natural x, y;
    std::int64_t lsb = 0;
    if (lo->exponent() <= floor_pos) {
        // The small operand lies strictly inside one rounding cell of hi;
        // any representative in (0, 2^floor_pos) rounds identically.
        lsb = floor_pos - 1;
        x = hi->significand() << std::uint64_t(hi_lsb - lsb);
        y = Natural(1);
    } else {
        const std::int64_t lo_lsb = lo->lsb_exponent();
        lsb = std::min(hi_lsb, lo_lsb);
        x = hi->significand() << std::uint64_t(hi_lsb - lsb);
        y = lo->significand() << std::uint64_t(lo_lsb - lsb);
    }
    if (hi->is_negative() == lo->is_negative()) {
        return BigFloat::round_from(hi->is_negative(), x + y, lsb, ctx.bits());
    }
    auto c = x <=> y;
    if (c == 0) return {};
    if (c > 0) return BigFloat::round_from(hi->is_negative(), x - y, lsb, ctx.bits());
    return BigFloat::round_from(lo->is_negative(), y - x, lsb, ctx.bits());
}

BigFloat sub(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    return add(a, -b, ctx);
}

BigFloat mul(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    if (a.is_zero() || b.is_zero()) return {};
    return BigFloat::round_from(a.is_negative() != b.is_negative(),
                                a.significand() * b.significand(),
                                a.lsb_exponent() + b.lsb_exponent(), ctx.bits());
}

BigFloat div(const BigFloat& a, const BigFloat& b, const PrecisionContext& ctx) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_zero()) return {};
    Natural ma = a.significand();
    Natural mb = b.significand();
    const std::int64_t need = std::int64_t(ctx.bits()) + 3 + std::int64_t(mb.bit_length()) -
                              std::int64_t(ma.bit_length());
    const std::uint64_t shift = std::uint64_t(std::max<std::int64_t>(need, 0));
    auto [q, r] = Natural::divmod(ma << shift, mb);
    return BigFloat::round_from(a.is_negative() != b.is_negative(), std::move(q),
                                a.lsb_exponent() - std::int64_t(shift) - b.lsb_exponent(),
                                ctx.bits(), !r.is_zero());
}

BigFloat div_small(const BigFloat& a, std::uint32_t d, const PrecisionContext& ctx) {
    if (d == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_zero()) return {};
    Natural ma = a.significand();
    const std::int64_t need = std::int64_t(ctx.bits()) + 3 + 32 - std::int64_t(ma.bit_length());
    const std::uint64_t shift = std::uint64_t(std::max<std::int64_t>(need, 0));
    auto [q, r] = (ma << shift).divmod_small(d);
    return BigFloat::round_from(a.is_negative(), std::move(q),
                                a.lsb_exponent() - std::int64_t(shift), ctx.bits(), r != 0);
}

BigFloat mul_small(const BigFloat& a, std::uint32_t m, const PrecisionContext& ctx) {
    if (a.is_zero() || m == 0) return {};
    return BigFloat::round_from(a.is_negative(), a.significand().mul_small(m), a.lsb_exponent(),
                                ctx.bits());
}

BigFloat sqrt(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.is_negative()) {
        fail(ErrorKind::Domain, "sqrt of negative value");
    }
    if (x.is_zero()) return {};
    Natural m = x.significand();
    std::int64_t e = x.lsb_exponent();
    std::int64_t want = 2 * (std::int64_t(ctx.bits()) + 2) - std::int64_t(m.bit_length());
    std::int64_t shift = std::max<std::int64_t>(want, 0);
    if (((e - shift) % 2) != 0) ++shift;
    Natural scaled = m << std::uint64_t(shift);
    Natural r = Natural::isqrt(scaled);
    bool inexact = (r * r) != scaled;
    return BigFloat::round_from(false, std::move(r), (e - shift) / 2, ctx.bits(), inexact);
}

namespace {

double compose_double(bool negative, const Natural& mag, std::int64_t lsb, std::int64_t top) {
    // top: value lies in [2^(top-1), 2^top).
    if (top > 1024) fail(ErrorKind::Range, "value too large for a double");
    std::int64_t avail = std::min<std::int64_t>(53, top + 1074);
    if (avail <= 0) return negative ? -0.0 : 0.0;
    RoundedMag rm = round_mag(mag, lsb, std::uint64_t(avail), false);
    double v = std::ldexp(double(rm.q.low_u64()), int(rm.lsb));
    if (std::isinf(v)) fail(ErrorKind::Range, "value too large for a double");
    return negative ? -v : v;
}

}  // namespace

double downcast_double(const BigFloat& x) {
    if (x.is_zero()) return 0.0;
    return compose_double(x.is_negative(), x.significand(), x.lsb_exponent(), x.exponent());
}

double downcast_double(const BigInt& x) {
    if (x.is_zero()) return 0.0;
    return compose_double(x.is_negative(), x.magnitude(), 0, std::int64_t(x.bit_length()));
}

}  // namespace apc
