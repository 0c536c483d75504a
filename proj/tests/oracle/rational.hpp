#pragma once
// Exact rational reference for float rounding, built on
// boost::multiprecision so that it shares no code with the limb engine.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>

#include "apc/bignum/bigfloat.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_int significand_of(const apc::BigFloat& x) {
    cpp_int m = 0;
    for (std::uint32_t limb : x.limbs()) m = (m << 32) | limb;
    return m;
}

inline cpp_rational to_rational(const apc::BigFloat& x) {
    if (x.is_zero()) return 0;
    cpp_int m = significand_of(x);
    std::int64_t e = x.lsb_exponent();
    cpp_rational r = e >= 0 ? cpp_rational(cpp_int(m << unsigned(e)))
                            : cpp_rational(m, cpp_int(1) << unsigned(-e));
    return x.is_negative() ? cpp_rational(-r) : r;
}

struct Rounded {
    bool zero = true;
    bool negative = false;
    cpp_int q;            // exactly `bits` bits
    std::int64_t lsb = 0; // value = q * 2^lsb
};

// Round-to-nearest, ties-to-even of an exact rational to `bits` bits.
inline Rounded round_rational(const cpp_rational& value, unsigned bits) {
    Rounded out;
    if (value == 0) return out;
    out.zero = false;
    out.negative = value < 0;
    cpp_rational a = out.negative ? cpp_rational(-value) : value;
    cpp_int num = boost::multiprecision::numerator(a);
    cpp_int den = boost::multiprecision::denominator(a);
    std::int64_t t = std::int64_t(msb(num)) - std::int64_t(msb(den));
    // Want q = floor(a * 2^k) with 2^(bits-1) <= q < 2^bits.
    for (;;) {
        std::int64_t k = std::int64_t(bits) - 1 - t;
        cpp_int n = k >= 0 ? cpp_int(num << unsigned(k)) : num;
        cpp_int d = k >= 0 ? den : cpp_int(den << unsigned(-k));
        cpp_int q = n / d;
        cpp_int r = n - q * d;
        if (q < (cpp_int(1) << (bits - 1))) { --t; continue; }
        if (q >= (cpp_int(1) << bits)) { ++t; continue; }
        cpp_int twice = r * 2;
        if (twice > d || (twice == d && (q & 1) != 0)) ++q;
        std::int64_t lsb = -k;
        if (q == (cpp_int(1) << bits)) { q >>= 1; ++lsb; }
        out.q = q;
        out.lsb = lsb;
        return out;
    }
}

// True when x is exactly the correctly rounded image of value at bits.
inline bool matches(const apc::BigFloat& x, const cpp_rational& value, unsigned bits) {
    Rounded r = round_rational(value, bits);
    if (r.zero) return x.is_zero();
    if (x.is_zero() || x.is_negative() != r.negative) return false;
    cpp_int m = significand_of(x);
    std::int64_t lsb = x.lsb_exponent();
    unsigned stored = unsigned(x.bits());
    if (stored < bits) return false;
    // Stored significand carries (stored - bits) trailing zero bits.
    cpp_int expect = r.q << (stored - bits);
    return m == expect && lsb == r.lsb - std::int64_t(stored - bits);
}

// Random normalized float with `words` limbs and exponent in [lo, hi].
inline apc::BigFloat random_float(std::mt19937_64& rng, std::uint32_t words, int lo, int hi) {
    std::vector<std::uint32_t> le(words);
    for (auto& l : le) l = std::uint32_t(rng());
    le.back() |= 0x80000000u;
    std::uniform_int_distribution<int> ed(lo, hi);
    bool neg = rng() & 1;
    return apc::BigFloat::round_from(neg, apc::detail::Natural::from_limbs_le(le),
                                     ed(rng) - std::int64_t(32 * words), 32ull * words);
}

}  // namespace oracle
