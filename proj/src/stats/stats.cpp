#include "apc/stats/stats.hpp"

#include <algorithm>
#include <cmath>

#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"

namespace apc::stats {

using detail::Natural;

namespace {

// Exact value m * 2^e.
struct Dyadic {
    BigInt m;
    std::int64_t e = 0;
};

constexpr std::int64_t kMaxAlignShift = std::int64_t(1) << 24;

BigInt shl(const BigInt& v, std::uint64_t bits) {
    if (v.is_zero() || bits == 0) return v;
    return BigInt(v.sign(), v.magnitude() << bits);
}

Dyadic to_dyadic(const Number& x) {
    if (x.is_int()) return {x.as_int(), 0};
    const BigFloat& f = x.as_float();
    if (f.is_zero()) return {};
    return {BigInt(f.is_negative() ? -1 : 1, f.significand()), f.lsb_exponent()};
}

Dyadic add(const Dyadic& a, const Dyadic& b) {
    if (a.m.is_zero()) return b;
    if (b.m.is_zero()) return a;
    const std::int64_t e = std::min(a.e, b.e);
    if (std::max(a.e, b.e) - e > kMaxAlignShift) {
        fail(ErrorKind::Range, "data span too many binary orders of magnitude for exact summation");
    }
    return {shl(a.m, std::uint64_t(a.e - e)) + shl(b.m, std::uint64_t(b.e - e)), e};
}

Dyadic mul(const Dyadic& a, const Dyadic& b) { return {a.m * b.m, a.e + b.e}; }
Dyadic mul(const Dyadic& a, std::int64_t k) { return {a.m * BigInt(k), a.e}; }
Dyadic neg(const Dyadic& a) { return {-a.m, a.e}; }

BigFloat exact(const Dyadic& d) {
    if (d.m.is_zero()) return {};
    std::uint64_t bits = (d.m.bit_length() + 31) / 32 * 32;
    return BigFloat::round_from(d.m.is_negative(), d.m.magnitude(), d.e, bits);
}

// n/d rounded once to ctx; keeps an exact integer when possible.
Number ratio(const Dyadic& n, const Dyadic& d, const PrecisionContext& ctx) {
    if (n.e >= 0 && d.e >= 0) {
        BigInt num = shl(n.m, std::uint64_t(n.e)), den = shl(d.m, std::uint64_t(d.e));
        BigInt q, r;
        BigInt::divmod(num, den, q, r);
        if (r.is_zero()) return q;
    }
    return div(exact(n), exact(d), ctx);
}

// sqrt(n/d) for n, d >= 0, correctly rounded to bits.
BigFloat sqrt_ratio(const Dyadic& n, const Dyadic& d, std::uint64_t bits) {
    if (n.m.is_zero()) return {};
    Natural num = n.m.magnitude();
    const Natural& den = d.m.magnitude();
    std::int64_t e = n.e - d.e;
    if (e % 2 != 0) {
        num = num << 1;
        e -= 1;
    }
    const std::int64_t have = std::int64_t(num.bit_length()) - std::int64_t(den.bit_length());
    const std::int64_t want = 2 * (std::int64_t(bits) + 2) + 2;
    const std::int64_t k = std::max<std::int64_t>(0, (want - have + 1) / 2);
    auto [q, r] = Natural::divmod(num << std::uint64_t(2 * k), den);
    Natural s = Natural::isqrt(q);
    const bool sticky = !r.is_zero() || s * s != q;
    return BigFloat::round_from(false, std::move(s), e / 2 - k, bits, sticky);
}

struct Sums {
    std::size_t n = 0;
    Dyadic s;   // sum of x
    Dyadic s2;  // sum of x^2
};

Sums accumulate(const NumVector& v, bool squares, const PrecisionContext& ctx) {
    Sums out;
    out.n = v.size();
    for (const Number& x : v.elements()) {
        Dyadic d = to_dyadic(x);
        out.s = add(out.s, d);
        if (squares) out.s2 = add(out.s2, mul(d, d));
        ctx.poll();
    }
    return out;
}

void require_count(const NumVector& v, std::size_t min, const char* what) {
    if (v.size() < min) {
        fail(ErrorKind::Domain, std::string(what) + " requires at least " + std::to_string(min) +
                                    " values, got " + std::to_string(v.size()));
    }
}

Dyadic count(std::size_t n) { return {BigInt(std::int64_t(n)), 0}; }

// n * sum(x^2) - (sum x)^2 = n * sum((x - mean)^2)
Dyadic scaled_deviation(const Sums& s) { return add(mul(s.s2, std::int64_t(s.n)), neg(mul(s.s, s.s))); }

BigFloat with_sign(BigFloat x, int sign) { return sign < 0 ? -x : x; }

bool below_alpha(const BigFloat& p) { return downcast_double(p) < kAlpha; }

// B(a, 1/2) for a = a2 / 2 via B(a + 1, b) = B(a, b) * a / (a + b).
BigFloat beta_half(std::uint64_t a2, const PrecisionContext& w) {
    BigFloat b;
    std::uint64_t start;
    if (a2 % 2 == 0) {
        b = BigFloat::from_int(2, w);  // B(1, 1/2)
        start = 2;
    } else {
        b = pi_bbp(w);  // B(1/2, 1/2)
        start = 1;
    }
    for (std::uint64_t k2 = start; k2 < a2; k2 += 2) {
        // a = k2/2: multiply by k2 / (k2 + 1)
        b = div(mul_small(b, std::uint32_t(k2), w), BigFloat::from_int(std::int64_t(k2 + 1), w), w);
        w.poll();
    }
    return b;
}

// x^(k2/2)
BigFloat pow_half(const BigFloat& x, std::uint64_t k2, const PrecisionContext& w) {
    Number p = pow(Number(x), Number(BigInt(std::int64_t(k2 / 2))), w);
    BigFloat out = p.to_float(w);
    if (k2 % 2) out = mul(out, sqrt(x, w), w);
    return out;
}

bool negligible(const BigFloat& delta, const PrecisionContext& w) {
    return delta.is_zero() || delta.exponent() < -std::int64_t(w.bits()) + 8;
}

// Continued fraction for I_x(a, b) with a = a2/2, b = b2/2 (modified Lentz).
BigFloat beta_cf(const BigFloat& x, std::int64_t a2, std::int64_t b2, const PrecisionContext& w) {
    const BigFloat one = BigFloat::from_int(1, w);
    const BigFloat tiny = BigFloat::from_int(1, w).ldexp(-2 * std::int64_t(w.bits()));
    auto guard = [&](BigFloat v) { return v.is_zero() ? tiny : v; };
    auto coef = [&](std::int64_t num, std::int64_t den) {
        return mul(div(BigFloat::from_int(num, w), BigFloat::from_int(den, w), w), x, w);
    };
    BigFloat c = one;
    BigFloat d = guard(sub(one, coef(a2 + b2, a2 + 2), w));
    d = div(one, d, w);
    BigFloat h = d;
    for (std::int64_t m = 1; m < 1'000'000; ++m) {
        BigFloat aa = coef(2 * m * (b2 - 2 * m), (a2 - 2 + 4 * m) * (a2 + 4 * m));
        d = div(one, guard(add(one, mul(aa, d, w), w)), w);
        c = guard(add(one, div(aa, c, w), w));
        h = mul(h, mul(d, c, w), w);
        aa = coef(-(a2 + 2 * m) * (a2 + b2 + 2 * m), (a2 + 4 * m) * (a2 + 2 + 4 * m));
        d = div(one, guard(add(one, mul(aa, d, w), w)), w);
        c = guard(add(one, div(aa, c, w), w));
        BigFloat del = mul(d, c, w);
        h = mul(h, del, w);
        if (negligible(sub(del, one, w), w)) return h;
        w.poll();
    }
    fail(ErrorKind::Range, "incomplete beta continued fraction did not converge");
}

}  // namespace

Number mean(const NumVector& v, const PrecisionContext& ctx) {
    require_count(v, 1, "mean");
    Sums s = accumulate(v, false, ctx);
    return ratio(s.s, count(s.n), ctx);
}

Number stddev(const NumVector& v, const PrecisionContext& ctx) {
    require_count(v, 2, "stddev");
    Sums s = accumulate(v, true, ctx);
    Dyadic num = scaled_deviation(s);
    Dyadic den = count(s.n * (s.n - 1));
    // Exact when the variance is a perfect square of an integer.
    Number var = ratio(num, den, ctx);
    if (var.is_int()) {
        Natural root = Natural::isqrt(var.as_int().magnitude());
        if (root * root == var.as_int().magnitude()) return BigInt(root.is_zero() ? 0 : 1, root);
    }
    return sqrt_ratio(num, den, ctx.bits());
}

ZTestResult ztest(const NumVector& v, const Number& mu0, const Number& sigma, const PrecisionContext& ctx) {
    require_count(v, 1, "ztest");
    if (sigma.sign() <= 0) fail(ErrorKind::Domain, "ztest requires sigma > 0, got " + sigma.format(17));
    Sums s = accumulate(v, false, ctx);
    const Dyadic n = count(s.n);
    const Dyadic diff = add(s.s, neg(mul(to_dyadic(mu0), n)));  // sum - n*mu0
    const Dyadic sig = to_dyadic(sigma);
    const Dyadic num = mul(diff, diff);
    const Dyadic den = mul(n, mul(sig, sig));  // z^2 = num / den

    ZTestResult r;
    r.n = s.n;
    r.sample_mean = ratio(s.s, n, ctx);
    r.mu0 = mu0;
    r.sigma = sigma;
    r.z = with_sign(sqrt_ratio(num, den, ctx.bits()), diff.m.sign());
    PrecisionContext w = ctx.guarded();
    BigFloat x = sqrt_ratio(num, mul(den, std::int64_t(2)), w.bits());  // |z| / sqrt(2)
    r.p = erfc(x, ctx);
    r.reject = below_alpha(r.p);
    return r;
}

BigFloat incomplete_beta_half(const BigFloat& x, std::uint64_t a2, const PrecisionContext& ctx) {
    const PrecisionContext w = ctx.guarded(3);
    const BigFloat one = BigFloat::from_int(1, w);
    if (x.sign() <= 0) return {};
    if (compare(Number(x), Number(one)) >= 0) return BigFloat::from_int(1, ctx);
    const BigFloat y = sub(one, x, w);
    const BigFloat beta = beta_half(a2, w);
    // Direct fraction converges for x < (a + 1) / (a + b + 2).
    const BigFloat threshold =
        div(BigFloat::from_int(std::int64_t(a2 + 2), w), BigFloat::from_int(std::int64_t(a2 + 5), w), w);
    const std::int64_t ia2 = std::int64_t(a2);
    if (x < threshold) {
        BigFloat front = mul(pow_half(x, a2, w), pow_half(y, 1, w), w);
        front = div(front, mul_small(beta, 1, w), w);
        front = div(mul_small(front, 2, w), BigFloat::from_int(ia2, w), w);  // / a
        return mul(front, beta_cf(x, ia2, 1, w), w).rounded(ctx);
    }
    BigFloat front = mul(pow_half(y, 1, w), pow_half(x, a2, w), w);
    front = div(mul_small(front, 2, w), beta, w);  // / (1/2 * B)
    BigFloat tail = mul(front, beta_cf(y, 1, ia2, w), w);
    return sub(one, tail, w).rounded(ctx);
}

TTestResult ttest(const NumVector& v, const Number& mu0, const PrecisionContext& ctx) {
    require_count(v, 2, "ttest");
    Sums s = accumulate(v, true, ctx);
    const Dyadic n = count(s.n);
    const Dyadic q = scaled_deviation(s);  // n * sum((x - mean)^2)
    if (q.m.is_zero()) fail(ErrorKind::Domain, "ttest requires data with non-zero variance");
    const Dyadic diff = add(s.s, neg(mul(to_dyadic(mu0), n)));
    const Dyadic d2 = mul(diff, diff);

    TTestResult r;
    r.n = s.n;
    r.df = s.n - 1;
    r.sample_mean = ratio(s.s, n, ctx);
    r.mu0 = mu0;
    r.sd = sqrt_ratio(q, count(s.n * (s.n - 1)), ctx.bits());
    r.t = with_sign(sqrt_ratio(mul(d2, std::int64_t(r.df)), q, ctx.bits()), diff.m.sign());
    // p = I_x(df/2, 1/2) with x = df / (df + t^2) = q / (q + diff^2)
    PrecisionContext w = ctx.guarded(3);
    BigFloat x = div(exact(q), exact(add(q, d2)), w);
    r.p = incomplete_beta_half(x, r.df, ctx);
    r.reject = below_alpha(r.p);
    return r;
}

Histogram histogram(const std::vector<double>& data, std::size_t bins) {
    if (data.empty()) fail(ErrorKind::Domain, "frequency requires at least 1 value, got 0");
    if (bins == 0) bins = std::size_t(std::ceil(std::sqrt(double(data.size()))));
    auto [lo_it, hi_it] = std::minmax_element(data.begin(), data.end());
    Histogram h;
    h.lo = *lo_it;
    const double span = *hi_it - *lo_it;
    h.width = span > 0 ? span / double(bins) : 1.0 / double(bins);
    h.counts.assign(bins, 0);
    for (double x : data) {
        auto idx = std::size_t(std::floor((x - h.lo) / h.width));
        if (idx >= bins) idx = bins - 1;
        ++h.counts[idx];
    }
    return h;
}

}  // namespace apc::stats
