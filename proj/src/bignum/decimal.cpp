#include "apc/bignum/decimal.hpp"

#include <cmath>
#include <cstdlib>

#include "apc/errors.hpp"

namespace apc {

using detail::Natural;

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

// round_half_up(|x| * 10^k) for x = m * 2^e.
Natural scaled_round(const Natural& m, std::int64_t e, std::int64_t k) {
    Natural num = m;
    Natural den(1);
    if (e >= 0) {
        num = num << std::uint64_t(e);
    } else {
        den = den << std::uint64_t(-e);
    }
    if (k >= 0) {
        num = num * Natural::pow10(std::uint64_t(k));
    } else {
        den = den * Natural::pow10(std::uint64_t(-k));
    }
    auto [q, r] = Natural::divmod(num, den);
    if ((r << 1) >= den) q = q.add_small(1);
    return q;
}

}  // namespace

std::string format_decimal(const BigInt& x) { return x.to_string(); }

std::string format_decimal(const BigFloat& x, std::uint32_t digits) {
    if (digits == 0) digits = 1;
    if (x.is_zero()) return "0";
    const Natural m = x.significand();
    const std::int64_t e = x.lsb_exponent();
    std::int64_t d10 = std::int64_t(std::floor(double(x.exponent() - 1) * kLog10Of2));

    std::string s;
    for (int iter = 0; iter < 64; ++iter) {
        Natural n = scaled_round(m, e, std::int64_t(digits) - 1 - d10);
        s = n.to_decimal();
        std::int64_t diff = std::int64_t(s.size()) - std::int64_t(digits);
        if (diff == 0) break;
        d10 += diff;
    }

    std::size_t keep = s.size();
    while (keep > 1 && s[keep - 1] == '0') --keep;
    s.resize(keep);

    std::string out = x.is_negative() ? "-" : "";
    const auto len = std::int64_t(s.size());
    if (d10 >= -5 && d10 < std::int64_t(digits)) {
        if (d10 >= 0) {
            if (len <= d10 + 1) {
                out += s;
                out.append(std::size_t(d10 + 1 - len), '0');
            } else {
                out.append(s, 0, std::size_t(d10 + 1));
                out += '.';
                out.append(s, std::size_t(d10 + 1), std::string::npos);
            }
        } else {
            out += "0.";
            out.append(std::size_t(-d10 - 1), '0');
            out += s;
        }
        return out;
    }
    out += s[0];
    if (s.size() > 1) {
        out += '.';
        out.append(s, 1, std::string::npos);
    }
    out += d10 < 0 ? "e-" : "e+";
    out += std::to_string(d10 < 0 ? -d10 : d10);
    return out;
}

std::variant<BigInt, BigFloat> parse_decimal(std::string_view text, const PrecisionContext& ctx) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string mantissa;
    std::int64_t frac_digits = 0;
    bool point = false;
    bool has_exp = false;
    std::int64_t exp10 = 0;
    auto bad = [&](std::size_t at, const std::string& what) -> SyntaxError {
        return SyntaxError(what + " in numeric literal '" + std::string(text) + "'",
                           {1, at + 1, at});
    };
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa += c;
            if (point) ++frac_digits;
        } else if (c == '.' && !point) {
            point = true;
        } else {
            break;
        }
    }
    if (mantissa.empty()) throw bad(i, "expected digits");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        has_exp = true;
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            eneg = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        std::int64_t v = 0;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            if (v > 1'000'000'000) fail(ErrorKind::Range, "decimal exponent out of range");
            v = v * 10 + (text[i] - '0');
        }
        if (i == start) throw bad(i, "expected exponent digits");
        exp10 = eneg ? -v : v;
    }
    if (i != text.size()) throw bad(i, "unexpected character '" + std::string(1, text[i]) + "'");

    Natural digits = Natural::from_decimal(mantissa);
    if (!point && !has_exp) return BigInt(negative ? -1 : 1, std::move(digits));
    if (digits.is_zero()) return BigFloat{};

    const std::int64_t scale = exp10 - frac_digits;
    if (scale >= 0) {
        return BigFloat::round_from(negative, digits * Natural::pow10(std::uint64_t(scale)), 0,
                                    ctx.bits());
    }
    Natural den = Natural::pow10(std::uint64_t(-scale));
    std::int64_t need = std::int64_t(ctx.bits()) + 3 + std::int64_t(den.bit_length()) -
                        std::int64_t(digits.bit_length());
    std::uint64_t shift = std::uint64_t(need > 0 ? need : 0);
    auto [q, r] = Natural::divmod(digits << shift, den);
    return BigFloat::round_from(negative, std::move(q), -std::int64_t(shift), ctx.bits(),
                                !r.is_zero());
}

std::uint32_t round_trip_digits(std::uint64_t bits) {
    return std::uint32_t(std::ceil(double(bits) * kLog10Of2)) + 1;
}

}  // namespace apc
