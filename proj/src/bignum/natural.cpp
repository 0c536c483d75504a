#include "apc/bignum/natural.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

namespace apc::detail {

namespace {

constexpr std::size_t kKaratsubaThreshold = 40;
constexpr limb_t kDecimalChunk = 1000000000u;  // 10^9

using Limbs = std::vector<limb_t>;

void trim_vec(Limbs& v) noexcept {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int cmp_vec(std::span<const limb_t> a, std::span<const limb_t> b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Limbs add_vec(std::span<const limb_t> a, std::span<const limb_t> b) {
    if (a.size() < b.size()) std::swap(a, b);
    Limbs r(a.size() + 1);
    dlimb_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dlimb_t s = dlimb_t(a[i]) + (i < b.size() ? b[i] : 0) + carry;
        r[i] = limb_t(s);
        carry = s >> kLimbBits;
    }
    r[a.size()] = limb_t(carry);
    trim_vec(r);
    return r;
}

// a -= b in place, a >= b.
void sub_in_place(Limbs& a, std::span<const limb_t> b) noexcept {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = std::int64_t(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = s < 0 ? 1 : 0;
        a[i] = limb_t(s + (borrow << kLimbBits));
        if (i >= b.size() && borrow == 0) break;
    }
    trim_vec(a);
}

Limbs mul_school(std::span<const limb_t> a, std::span<const limb_t> b) {
    if (a.empty() || b.empty()) return {};
    Limbs r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        dlimb_t carry = 0;
        const dlimb_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            dlimb_t t = ai * b[j] + r[i + j] + carry;
            r[i + j] = limb_t(t);
            carry = t >> kLimbBits;
        }
        r[i + b.size()] = limb_t(carry);
    }
    trim_vec(r);
    return r;
}

// r += a << (shift limbs)
void add_shifted(Limbs& r, std::span<const limb_t> a, std::size_t shift) {
    if (r.size() < a.size() + shift + 1) r.resize(a.size() + shift + 1, 0);
    dlimb_t carry = 0;
    std::size_t i = 0;
    for (; i < a.size(); ++i) {
        dlimb_t s = dlimb_t(r[i + shift]) + a[i] + carry;
        r[i + shift] = limb_t(s);
        carry = s >> kLimbBits;
    }
    for (std::size_t k = i + shift; carry != 0; ++k) {
        if (k >= r.size()) r.push_back(0);
        dlimb_t s = dlimb_t(r[k]) + carry;
        r[k] = limb_t(s);
        carry = s >> kLimbBits;
    }
}

Limbs mul_vec(std::span<const limb_t> a, std::span<const limb_t> b);

Limbs karatsuba(std::span<const limb_t> a, std::span<const limb_t> b) {
    const std::size_t half = std::max(a.size(), b.size()) / 2;
    auto lo = [&](std::span<const limb_t> x) {
        Limbs v(x.begin(), x.begin() + std::min(half, x.size()));
        trim_vec(v);
        return v;
    };
    auto hi = [&](std::span<const limb_t> x) {
        if (x.size() <= half) return Limbs{};
        return Limbs(x.begin() + half, x.end());
    };
    Limbs a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    Limbs z0 = mul_vec(a0, b0);
    Limbs z2 = mul_vec(a1, b1);
    Limbs z1 = mul_vec(add_vec(a0, a1), add_vec(b0, b1));
    sub_in_place(z1, z0);
    sub_in_place(z1, z2);
    Limbs r = z0;
    add_shifted(r, z1, half);
    add_shifted(r, z2, 2 * half);
    trim_vec(r);
    return r;
}

Limbs mul_vec(std::span<const limb_t> a, std::span<const limb_t> b) {
    if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_school(a, b);
    return karatsuba(a, b);
}

}  // namespace

Natural::Natural(std::uint64_t v) {
    if (v == 0) return;
    d_.push_back(limb_t(v));
    if (v >> kLimbBits) d_.push_back(limb_t(v >> kLimbBits));
}

Natural Natural::from_limbs_le(std::vector<limb_t> limbs) {
    Natural n;
    n.d_ = std::move(limbs);
    n.trim();
    return n;
}

void Natural::trim() noexcept { trim_vec(d_); }

std::uint64_t Natural::bit_length() const noexcept {
    if (d_.empty()) return 0;
    return (d_.size() - 1) * std::uint64_t(kLimbBits) + std::bit_width(d_.back());
}

bool Natural::bit(std::uint64_t i) const noexcept {
    std::uint64_t limb = i / kLimbBits;
    if (limb >= d_.size()) return false;
    return (d_[limb] >> (i % kLimbBits)) & 1u;
}

bool Natural::any_below(std::uint64_t i) const noexcept {
    std::uint64_t full = std::min<std::uint64_t>(i / kLimbBits, d_.size());
    for (std::uint64_t k = 0; k < full; ++k) {
        if (d_[k] != 0) return true;
    }
    if (full < d_.size()) {
        unsigned rem = unsigned(i % kLimbBits);
        if (rem != 0 && (d_[full] & ((limb_t(1) << rem) - 1))) return true;
    }
    return false;
}

std::uint64_t Natural::low_u64() const noexcept {
    std::uint64_t v = 0;
    if (!d_.empty()) v = d_[0];
    if (d_.size() > 1) v |= std::uint64_t(d_[1]) << kLimbBits;
    return v;
}

double Natural::approx_double_scaled(std::int64_t& exp2) const noexcept {
    std::uint64_t n = bit_length();
    if (n == 0) {
        exp2 = 0;
        return 0.0;
    }
    std::uint64_t shift = n > 64 ? n - 64 : 0;
    Natural top = *this >> shift;
    exp2 = std::int64_t(shift);
    return double(top.low_u64());
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    int c = cmp_vec(a.d_, b.d_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Natural operator+(const Natural& a, const Natural& b) {
    Natural r;
    r.d_ = add_vec(a.d_, b.d_);
    return r;
}

Natural operator-(const Natural& a, const Natural& b) {
    assert(a >= b);
    Natural r = a;
    sub_in_place(r.d_, b.d_);
    return r;
}

Natural operator*(const Natural& a, const Natural& b) {
    Natural r;
    r.d_ = mul_vec(a.d_, b.d_);
    return r;
}

Natural operator<<(const Natural& a, std::uint64_t bits) {
    if (a.is_zero() || bits == 0) return a;
    std::size_t limbs = std::size_t(bits / kLimbBits);
    unsigned rem = unsigned(bits % kLimbBits);
    Natural r;
    r.d_.assign(limbs, 0);
    r.d_.reserve(limbs + a.d_.size() + 1);
    if (rem == 0) {
        r.d_.insert(r.d_.end(), a.d_.begin(), a.d_.end());
    } else {
        limb_t carry = 0;
        for (limb_t x : a.d_) {
            r.d_.push_back((x << rem) | carry);
            carry = x >> (kLimbBits - rem);
        }
        if (carry) r.d_.push_back(carry);
    }
    return r;
}

Natural operator>>(const Natural& a, std::uint64_t bits) {
    std::uint64_t limbs = bits / kLimbBits;
    if (limbs >= a.d_.size()) return {};
    unsigned rem = unsigned(bits % kLimbBits);
    Natural r;
    r.d_.assign(a.d_.begin() + std::ptrdiff_t(limbs), a.d_.end());
    if (rem != 0) {
        for (std::size_t i = 0; i < r.d_.size(); ++i) {
            limb_t hi = i + 1 < r.d_.size() ? r.d_[i + 1] : 0;
            r.d_[i] = (r.d_[i] >> rem) | (hi << (kLimbBits - rem));
        }
    }
    r.trim();
    return r;
}

Natural Natural::mul_small(limb_t m) const {
    if (m == 0 || is_zero()) return {};
    Natural r;
    r.d_.reserve(d_.size() + 1);
    dlimb_t carry = 0;
    for (limb_t x : d_) {
        dlimb_t t = dlimb_t(x) * m + carry;
        r.d_.push_back(limb_t(t));
        carry = t >> kLimbBits;
    }
    if (carry) r.d_.push_back(limb_t(carry));
    return r;
}

Natural Natural::add_small(limb_t a) const {
    return *this + Natural(a);
}

std::pair<Natural, limb_t> Natural::divmod_small(limb_t m) const {
    assert(m != 0);
    Natural q;
    q.d_.resize(d_.size());
    dlimb_t rem = 0;
    for (std::size_t i = d_.size(); i-- > 0;) {
        dlimb_t cur = (rem << kLimbBits) | d_[i];
        q.d_[i] = limb_t(cur / m);
        rem = cur % m;
    }
    q.trim();
    return {std::move(q), limb_t(rem)};
}

// Knuth, TAOCP vol. 2, algorithm D.
std::pair<Natural, Natural> Natural::divmod(const Natural& a, const Natural& b) {
    assert(!b.is_zero());
    if (a < b) return {Natural{}, a};
    if (b.d_.size() == 1) {
        auto [q, r] = a.divmod_small(b.d_[0]);
        return {std::move(q), Natural(r)};
    }
    const unsigned s = unsigned(std::countl_zero(b.d_.back()));
    Limbs v = (b << s).d_;
    Limbs u = (a << s).d_;
    if (u.size() == a.d_.size()) u.push_back(0);
    if (u.size() < a.d_.size() + 1) u.resize(a.d_.size() + 1, 0);
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    Limbs q(m, 0);
    const dlimb_t base = dlimb_t(1) << kLimbBits;
    for (std::size_t j = m; j-- > 0;) {
        dlimb_t num = (dlimb_t(u[j + n]) << kLimbBits) | u[j + n - 1];
        dlimb_t qhat = num / v[n - 1];
        dlimb_t rhat = num % v[n - 1];
        while (qhat >= base || qhat * v[n - 2] > ((rhat << kLimbBits) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        std::int64_t borrow = 0;
        dlimb_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            dlimb_t p = qhat * v[i] + carry;
            carry = p >> kLimbBits;
            std::int64_t t = std::int64_t(u[i + j]) - std::int64_t(limb_t(p)) - borrow;
            borrow = t < 0 ? 1 : 0;
            u[i + j] = limb_t(t + (borrow << kLimbBits));
        }
        std::int64_t t = std::int64_t(u[j + n]) - std::int64_t(carry) - borrow;
        borrow = t < 0 ? 1 : 0;
        u[j + n] = limb_t(t + (borrow << kLimbBits));
        if (borrow) {
            --qhat;
            dlimb_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                dlimb_t s2 = dlimb_t(u[i + j]) + v[i] + c;
                u[i + j] = limb_t(s2);
                c = s2 >> kLimbBits;
            }
            u[j + n] = limb_t(dlimb_t(u[j + n]) + c);
        }
        q[j] = limb_t(qhat);
    }
    Natural quot = from_limbs_le(std::move(q));
    u.resize(n);
    Natural rem = from_limbs_le(std::move(u)) >> s;
    return {std::move(quot), std::move(rem)};
}

Natural Natural::isqrt(const Natural& a) {
    if (a.is_zero()) return {};
    // Newton from an over-estimate converges monotonically downwards.
    std::uint64_t n = a.bit_length();
    Natural x = Natural(1) << ((n + 1) / 2);
    if (n > 104) {
        // Seed from the leading bits: x0 = (floor(sqrt(top)) + 2) << k.
        std::uint64_t shift = (n - 100) & ~std::uint64_t(1);
        Natural top = a >> shift;
        std::int64_t e = 0;
        double t = top.approx_double_scaled(e);
        double root = std::sqrt(std::ldexp(t, int(e)));
        Natural seed(std::uint64_t(root) + 2);
        x = seed << (shift / 2);
    }
    while (true) {
        Natural y = (x + divmod(a, x).first) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

Natural Natural::pow(const Natural& base, std::uint64_t exp) {
    Natural result(1);
    Natural b = base;
    while (exp) {
        if (exp & 1) result = result * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return result;
}

Natural Natural::pow10(std::uint64_t exp) { return pow(Natural(10), exp); }

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<limb_t> chunks;
    Natural cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_small(kDecimalChunk);
        chunks.push_back(r);
        cur = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

Natural Natural::from_decimal(std::string_view digits) {
    Natural r;
    std::size_t i = 0;
    std::size_t first = digits.size() % 9;
    if (first == 0) first = 9;
    while (i < digits.size()) {
        std::size_t len = (i == 0) ? first : 9;
        limb_t chunk = 0;
        limb_t scale = 1;
        for (std::size_t k = 0; k < len; ++k) {
            chunk = chunk * 10 + limb_t(digits[i + k] - '0');
            scale *= 10;
        }
        r = r.mul_small(scale) + Natural(chunk);
        i += len;
    }
    return r;
}

}  // namespace apc::detail
