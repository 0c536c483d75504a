#include "apc/bignum/elementary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "apc/bignum/decimal.hpp"
#include "apc/errors.hpp"

namespace apc {

namespace {

BigFloat one(const PrecisionContext& ctx) { return BigFloat::from_int(1, ctx); }

// True once `term` no longer affects `sum` at the working precision.
bool negligible(const BigFloat& term, const BigFloat& sum, const PrecisionContext& ctx) {
    if (term.is_zero()) return true;
    if (sum.is_zero()) return false;
    return term.exponent() < sum.exponent() - std::int64_t(ctx.bits()) - 2;
}

std::uint32_t words_for_bits(std::uint64_t bits) { return std::uint32_t((bits + 31) / 32); }

// sum_{k>=0} z^(2k+1) / (2k+1), |z| < 1.
BigFloat atanh_series(const BigFloat& z, const PrecisionContext& ctx) {
    BigFloat z2 = mul(z, z, ctx);
    BigFloat power = z;
    BigFloat sum;
    for (std::uint32_t k = 0;; ++k) {
        BigFloat term = div_small(power, 2 * k + 1, ctx);
        if (negligible(term, sum, ctx)) break;
        sum = add(sum, term, ctx);
        power = mul(power, z2, ctx);
        if ((k & 63) == 63) ctx.poll();
    }
    return sum;
}

std::string show(const BigFloat& x) { return format_decimal(x, 17); }

}  // namespace

BigFloat ln2(const PrecisionContext& ctx) {
    PrecisionContext w = ctx.guarded();
    BigFloat third = div_small(one(w), 3, w);
    return atanh_series(third, w).ldexp(1).rounded(ctx);
}

BigFloat log(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) {
        fail(ErrorKind::Domain, "log requires a positive argument, got " + show(x));
    }
    std::int64_t e = x.exponent();
    BigFloat m = x.ldexp(-e);  // [0.5, 1)
    if (m.to_double() < 0.70710678118654752) {
        m = m.ldexp(1);
        e -= 1;
    }
    const std::uint64_t ebits = std::bit_width(std::uint64_t(e < 0 ? -e : e));
    PrecisionContext w = ctx.with_words(ctx.words + 2 + words_for_bits(ebits));
    BigFloat one_w = one(w);
    BigFloat z = div(sub(m, one_w, w), add(m, one_w, w), w);
    BigFloat result = atanh_series(z, w).ldexp(1);
    if (e != 0) {
        result = add(result, mul(BigFloat::from_int(e, w), ln2(w), w), w);
    }
    return result.rounded(ctx);
}

BigFloat exp(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.is_zero()) return one(ctx);
    if (x.exponent() > 56) {
        fail(ErrorKind::Range, "exp argument " + show(x) + " out of range");
    }
    const std::uint64_t halvings = std::max<std::uint64_t>(
        8, std::uint64_t(std::sqrt(double(ctx.bits()))) / 2);
    const std::uint64_t extra =
        halvings + std::uint64_t(std::max<std::int64_t>(x.exponent(), 0)) + 16;
    PrecisionContext w = ctx.with_words(ctx.words + 2 + words_for_bits(extra));

    BigFloat l2 = ln2(w);
    std::int64_t k = div(x, l2, w).round_integer().to_i64();
    BigFloat r = sub(x, mul(BigFloat::from_int(k, w), l2, w), w);
    r = r.ldexp(-std::int64_t(halvings));

    BigFloat sum = one(w);
    BigFloat term = one(w);
    for (std::uint32_t n = 1;; ++n) {
        term = div_small(mul(term, r, w), n, w);
        if (negligible(term, sum, w)) break;
        sum = add(sum, term, w);
        if ((n & 63) == 63) w.poll();
    }
    for (std::uint64_t i = 0; i < halvings; ++i) sum = mul(sum, sum, w);
    return sum.ldexp(k).rounded(ctx);
}

namespace {

BigFloat pi_sum(std::uint32_t terms, const PrecisionContext& w) {
    BigFloat sum;
    for (std::uint32_t k = 0; k < terms; ++k) {
        // 4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6) over a common denominator.
        const BigInt kk(static_cast<std::int64_t>(k));
        const BigInt k2 = kk * kk;
        const BigInt num = BigInt(120) * k2 + BigInt(151) * kk + BigInt(47);
        const BigInt den = BigInt(512) * k2 * k2 + BigInt(1024) * k2 * kk + BigInt(712) * k2 +
                           BigInt(194) * kk + BigInt(15);
        BigFloat term = div(BigFloat::from_int(num, w), BigFloat::from_int(den, w), w);
        sum = add(sum, term.ldexp(-4 * std::int64_t(k)), w);
        if ((k & 63) == 63) w.poll();
    }
    return sum;
}

// Reduction x = k*(pi/2) + r with |r| <= pi/4; returns r and k mod 4.
struct Reduced {
    BigFloat r;
    unsigned quadrant = 0;
};

Reduced reduce_half_pi(const BigFloat& x, const PrecisionContext& w) {
    const std::uint64_t magnitude = std::uint64_t(std::max<std::int64_t>(x.exponent(), 0));
    std::uint64_t extra = magnitude + 32;
    for (int attempt = 0;; ++attempt) {
        PrecisionContext p = w.with_words(w.words + words_for_bits(extra));
        BigFloat half_pi = pi_bbp(p).ldexp(-1);
        BigInt k = div(x, half_pi, p).round_integer();
        if (k.is_zero()) return {x.rounded(w), 0};
        BigFloat r = sub(x, mul(BigFloat::from_int(k, p), half_pi, p), p);
        // Cancellation ate into the guard bits; retry with more.
        if (!r.is_zero() && r.exponent() < -16 && attempt < 16) {
            std::uint64_t lost = std::uint64_t(-r.exponent());
            if (lost + 16 > extra - magnitude) {
                extra = magnitude + lost + 48;
                continue;
            }
        }
        unsigned q = unsigned(k.magnitude().low_u64() & 3u);
        if (k.is_negative()) q = (4 - q) & 3u;
        return {r.rounded(w), q};
    }
}

BigFloat sin_series(const BigFloat& r, const PrecisionContext& w) {
    BigFloat r2 = mul(r, r, w);
    BigFloat term = r;
    BigFloat sum = r;
    for (std::uint32_t n = 1;; ++n) {
        term = -div_small(mul(term, r2, w), (2 * n) * (2 * n + 1), w);
        if (negligible(term, sum, w)) break;
        sum = add(sum, term, w);
    }
    return sum;
}

BigFloat cos_series(const BigFloat& r, const PrecisionContext& w) {
    BigFloat r2 = mul(r, r, w);
    BigFloat term = one(w);
    BigFloat sum = term;
    for (std::uint32_t n = 1;; ++n) {
        term = -div_small(mul(term, r2, w), (2 * n - 1) * (2 * n), w);
        if (negligible(term, sum, w)) break;
        sum = add(sum, term, w);
    }
    return sum;
}

}  // namespace

BigFloat pi_bbp(const PrecisionContext& ctx) {
    PrecisionContext w = ctx.guarded();
    const std::uint32_t terms = std::uint32_t(w.bits() / 4 + 2);
    return pi_sum(terms, w).rounded(ctx);
}

BigFloat pi_bbp_partial(std::uint32_t terms, const PrecisionContext& ctx) {
    return pi_sum(terms, ctx.guarded()).rounded(ctx);
}

BigFloat sin(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.is_zero()) return {};
    PrecisionContext w = ctx.with_words(ctx.words + 3);
    Reduced red = reduce_half_pi(x, w);
    BigFloat v;
    switch (red.quadrant) {
    case 0: v = sin_series(red.r, w); break;
    case 1: v = cos_series(red.r, w); break;
    case 2: v = -sin_series(red.r, w); break;
    default: v = -cos_series(red.r, w); break;
    }
    return v.rounded(ctx);
}

BigFloat cos(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.is_zero()) return one(ctx);
    PrecisionContext w = ctx.with_words(ctx.words + 3);
    Reduced red = reduce_half_pi(x, w);
    BigFloat v;
    switch (red.quadrant) {
    case 0: v = cos_series(red.r, w); break;
    case 1: v = -sin_series(red.r, w); break;
    case 2: v = -cos_series(red.r, w); break;
    default: v = sin_series(red.r, w); break;
    }
    return v.rounded(ctx);
}

namespace {

// erfc for a > 0.
BigFloat erfc_positive(const BigFloat& a, const PrecisionContext& ctx) {
    if (a.to_double() <= 3.0) {
        // erf(a) = 2/sqrt(pi) e^{-a^2} sum_n (2a^2)^n a / (1*3*...*(2n+1));
        // all terms positive, 1 - erf loses at most ~13 bits for a <= 3.
        PrecisionContext w = ctx.with_words(ctx.words + 3);
        BigFloat a2 = mul(a, a, w);
        BigFloat two_a2 = a2.ldexp(1);
        BigFloat term = a.rounded(w);
        BigFloat sum = term;
        for (std::uint32_t n = 1;; ++n) {
            term = div_small(mul(term, two_a2, w), 2 * n + 1, w);
            if (negligible(term, sum, w)) break;
            sum = add(sum, term, w);
            if ((n & 63) == 63) w.poll();
        }
        BigFloat scale = div(exp(-a2, w).ldexp(1), sqrt(pi_bbp(w), w), w);
        BigFloat erf_value = mul(scale, sum, w);
        return sub(one(w), erf_value, w).rounded(ctx);
    }
    // erfc(a) = e^{-a^2}/sqrt(pi) * 1/(a + (1/2)/(a + (2/2)/(a + (3/2)/(a + ...)))),
    // evaluated with the modified Lentz method.
    PrecisionContext w = ctx.guarded();
    BigFloat x = a.rounded(w);
    BigFloat f = x;
    BigFloat c = x;
    BigFloat d;
    const BigFloat tolerance = one(w).ldexp(-std::int64_t(w.bits()) + 4);
    for (std::uint32_t n = 1;; ++n) {
        BigFloat an = BigFloat::from_int(std::int64_t(n), w).ldexp(-1);
        d = add(x, mul(an, d, w), w);
        c = add(x, div(an, c, w), w);
        d = div(one(w), d, w);
        BigFloat delta = mul(c, d, w);
        f = mul(f, delta, w);
        if (sub(delta, one(w), w).abs() < tolerance) break;
        if ((n & 63) == 63) w.poll();
    }
    BigFloat e = exp(-mul(x, x, w), w);
    return div(e, mul(sqrt(pi_bbp(w), w), f, w), w).rounded(ctx);
}

}  // namespace

BigFloat erfc(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.is_zero()) return one(ctx);
    if (!x.is_negative()) return erfc_positive(x, ctx);
    PrecisionContext w = ctx.guarded();
    BigFloat tail = erfc_positive(x.abs(), w);
    return sub(BigFloat::from_int(2, w), tail, w).rounded(ctx);
}

}  // namespace apc
