#include "apc/bignum/number.hpp"

#include <algorithm>

#include "apc/bignum/decimal.hpp"
#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"

namespace apc {

namespace {

// Exact float image of an integer (enough bits to hold it).
BigFloat exact_float(const BigInt& v) {
    std::uint64_t bits = std::max<std::uint64_t>(v.bit_length(), 32);
    return BigFloat::round_from(v.is_negative(), v.magnitude(), 0, bits);
}

constexpr std::uint64_t kMaxIntegerPowerBits = std::uint64_t(1) << 26;

}  // namespace

bool Number::is_zero() const noexcept {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

int Number::sign() const noexcept {
    return std::visit([](const auto& x) { return x.sign(); }, v_);
}

bool Number::is_integral() const { return is_int() || as_float().is_integer(); }

BigInt Number::to_bigint() const {
    if (is_int()) return as_int();
    if (!as_float().is_integer()) {
        fail(ErrorKind::Type, "expected an integer, got " + format(17));
    }
    return as_float().trunc();
}

BigFloat Number::to_float(const PrecisionContext& ctx) const {
    if (is_int()) return BigFloat::from_int(as_int(), ctx);
    return as_float().rounded(ctx);
}

double Number::to_double() const {
    return std::visit([](const auto& x) { return downcast_double(x); }, v_);
}

Number Number::operator-() const {
    return std::visit([](const auto& x) { return Number(-x); }, v_);
}

Number Number::abs() const {
    return std::visit([](const auto& x) { return Number(x.abs()); }, v_);
}

std::string Number::format(std::uint32_t digits) const {
    if (is_int()) return format_decimal(as_int());
    return format_decimal(as_float(), digits);
}

std::strong_ordering compare(const Number& a, const Number& b) {
    if (a.is_int() && b.is_int()) return a.as_int() <=> b.as_int();
    const BigFloat fa = a.is_int() ? exact_float(a.as_int()) : a.as_float();
    const BigFloat fb = b.is_int() ? exact_float(b.as_int()) : b.as_float();
    return fa <=> fb;
}

Number add(const Number& a, const Number& b, const PrecisionContext& ctx) {
    if (a.is_int() && b.is_int()) return a.as_int() + b.as_int();
    return add(a.to_float(ctx), b.to_float(ctx), ctx);
}

Number sub(const Number& a, const Number& b, const PrecisionContext& ctx) {
    if (a.is_int() && b.is_int()) return a.as_int() - b.as_int();
    return sub(a.to_float(ctx), b.to_float(ctx), ctx);
}

Number mul(const Number& a, const Number& b, const PrecisionContext& ctx) {
    if (a.is_int() && b.is_int()) return a.as_int() * b.as_int();
    return mul(a.to_float(ctx), b.to_float(ctx), ctx);
}

Number div(const Number& a, const Number& b, const PrecisionContext& ctx) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_int() && b.is_int()) {
        BigInt q, r;
        BigInt::divmod(a.as_int(), b.as_int(), q, r);
        if (r.is_zero()) return q;
    }
    return div(a.to_float(ctx), b.to_float(ctx), ctx);
}

namespace {

BigFloat float_int_pow(const BigFloat& base, const BigInt& n, const PrecisionContext& ctx) {
    if (!n.fits_i64()) fail(ErrorKind::Range, "exponent too large");
    std::int64_t e = n.to_i64();
    std::uint64_t k = e < 0 ? std::uint64_t(-(e + 1)) + 1 : std::uint64_t(e);
    PrecisionContext w = ctx.guarded();
    BigFloat result = BigFloat::from_int(1, w);
    BigFloat b = base.rounded(w);
    while (k) {
        if (k & 1) result = mul(result, b, w);
        k >>= 1;
        if (k) b = mul(b, b, w);
        w.poll();
    }
    if (e < 0) result = div(BigFloat::from_int(1, w), result, w);
    return result.rounded(ctx);
}

}  // namespace

Number pow(const Number& a, const Number& b, const PrecisionContext& ctx) {
    if (b.is_integral()) {
        const BigInt n = b.to_bigint();
        if (a.is_int() && b.is_int()) {
            const BigInt& base = a.as_int();
            if (n.is_negative()) {
                if (base.is_zero()) fail(ErrorKind::DivisionByZero, "zero raised to a negative power");
                return div(Number(BigInt(1)), pow(a, Number(-n), ctx), ctx);
            }
            if (base.is_zero() || base == BigInt(1)) return n.is_zero() ? BigInt(1) : base;
            if (base == BigInt(-1)) return n.magnitude().is_odd() ? base : BigInt(1);
            if (!n.fits_i64() ||
                std::uint64_t(n.to_i64()) > kMaxIntegerPowerBits / std::max<std::uint64_t>(base.bit_length(), 1)) {
                fail(ErrorKind::Range, "integer power too large");
            }
            return BigInt::pow(base, std::uint64_t(n.to_i64()));
        }
        if (a.is_zero() && n.is_negative()) {
            fail(ErrorKind::DivisionByZero, "zero raised to a negative power");
        }
        return float_int_pow(a.to_float(ctx), n, ctx);
    }
    if (a.is_zero()) {
        if (b.sign() > 0) return BigFloat{};
        fail(ErrorKind::DivisionByZero, "zero raised to a negative power");
    }
    if (a.sign() < 0) {
        fail(ErrorKind::Domain, "negative base " + a.format(17) + " with non-integer exponent");
    }
    PrecisionContext w = ctx.guarded();
    BigFloat l = log(a.to_float(w), w);
    return exp(mul(b.to_float(w), l, w), w).rounded(ctx);
}

BigComplex add(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    return {add(a.re, b.re, ctx), add(a.im, b.im, ctx)};
}

BigComplex sub(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    return {sub(a.re, b.re, ctx), sub(a.im, b.im, ctx)};
}

BigComplex mul(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    PrecisionContext w = ctx.guarded();
    Number re = sub(mul(a.re, b.re, w), mul(a.im, b.im, w), w);
    Number im = add(mul(a.re, b.im, w), mul(a.im, b.re, w), w);
    auto fit = [&](const Number& n) { return n.is_int() ? n : Number(n.as_float().rounded(ctx)); };
    return {fit(re), fit(im)};
}

BigComplex div(const BigComplex& a, const BigComplex& b, const PrecisionContext& ctx) {
    if (b.re.is_zero() && b.im.is_zero()) fail(ErrorKind::DivisionByZero, "division by complex zero");
    PrecisionContext w = ctx.guarded();
    Number den = add(mul(b.re, b.re, w), mul(b.im, b.im, w), w);
    Number re_num = add(mul(a.re, b.re, w), mul(a.im, b.im, w), w);
    Number im_num = sub(mul(a.im, b.re, w), mul(a.re, b.im, w), w);
    auto fit = [&](const Number& n) { return n.is_int() ? n : Number(n.as_float().rounded(ctx)); };
    return {fit(div(re_num, den, w)), fit(div(im_num, den, w))};
}

BigComplex pow(const BigComplex& a, const BigInt& n, const PrecisionContext& ctx) {
    if (!n.fits_i64()) fail(ErrorKind::Range, "exponent too large");
    std::int64_t e = n.to_i64();
    std::uint64_t k = e < 0 ? std::uint64_t(-(e + 1)) + 1 : std::uint64_t(e);
    BigComplex result{Number::integer(1), Number::integer(0)};
    BigComplex b = a;
    while (k) {
        if (k & 1) result = mul(result, b, ctx);
        k >>= 1;
        if (k) b = mul(b, b, ctx);
        ctx.poll();
    }
    if (e < 0) result = div(BigComplex{Number::integer(1), Number::integer(0)}, result, ctx);
    return result;
}

bool operator==(const BigComplex& a, const BigComplex& b) {
    return compare(a.re, b.re) == 0 && compare(a.im, b.im) == 0;
}

}  // namespace apc
