#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

#include "apc/bignum/decimal.hpp"
#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"
#include "doctest.h"
#include "oracle/quadrature.hpp"
#include "oracle/rational.hpp"

using namespace apc;
namespace bmp = boost::multiprecision;
using Ref = bmp::number<bmp::cpp_bin_float<320, bmp::digit_base_2>>;

namespace {

const PrecisionContext kWords6{6, 48};

Ref to_ref(const BigFloat& x) {
    Ref m = 0;
    for (std::uint32_t limb : x.limbs()) m = m * Ref(4294967296.0) + Ref(limb);
    m = bmp::ldexp(m, int(x.lsb_exponent()));
    return x.is_negative() ? Ref(-m) : m;
}

// |got - want| measured in ulps of got at its own precision.
double ulp_error(const BigFloat& got, const Ref& want) {
    if (got.is_zero()) return want == 0 ? 0.0 : 1e300;
    Ref diff = bmp::abs(to_ref(got) - want);
    Ref ulp = bmp::ldexp(Ref(1), int(got.lsb_exponent()));
    return double(diff / ulp);
}

BigFloat random_in(std::mt19937_64& rng, double lo, double hi, const PrecisionContext& ctx) {
    std::uniform_real_distribution<double> d(lo, hi);
    BigFloat base = BigFloat::from_double(d(rng), ctx);
    // Fill low limbs so arguments are not double-representable.
    BigFloat tiny = BigFloat::from_double(d(rng) * 1e-17, ctx);
    return add(base, tiny, ctx);
}

}  // namespace

TEST_CASE("elementary functions within one ulp of an independent reference") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        BigFloat x = random_in(rng, -10, 10, kWords6);
        CHECK(ulp_error(sin(x, kWords6), bmp::sin(to_ref(x))) <= 1.0);
        CHECK(ulp_error(cos(x, kWords6), bmp::cos(to_ref(x))) <= 1.0);
        CHECK(ulp_error(exp(x, kWords6), bmp::exp(to_ref(x))) <= 1.0);
        BigFloat p = random_in(rng, 1e-3, 1e3, kWords6);
        CHECK(ulp_error(log(p, kWords6), bmp::log(to_ref(p))) <= 1.0);
    }
}

TEST_CASE("trig near multiples of pi keeps relative accuracy") {
    // sin(pi6) ~ 2^-193, so the reference needs well over 2 * 192 bits.
    using Wide = bmp::number<bmp::cpp_bin_float<1024, bmp::digit_base_2>>;
    BigFloat pi6 = pi_bbp(kWords6);
    BigFloat s = sin(pi6, kWords6);
    Wide want = bmp::sin(Wide(to_ref(pi6)));
    Wide diff = bmp::abs(Wide(to_ref(s)) - want);
    CHECK(double(diff / bmp::ldexp(Wide(1), int(s.lsb_exponent()))) <= 1.0);
    BigFloat big = BigFloat::from_int(1000000, kWords6);
    CHECK(ulp_error(sin(big, kWords6), bmp::sin(to_ref(big))) <= 1.0);
}

TEST_CASE("identities and fixed points") {
    CHECK(format_decimal(exp(BigFloat{}, kWords6), 48) == "1");
    CHECK(log(BigFloat::from_int(1, kWords6), kWords6).is_zero());
    CHECK(format_decimal(cos(BigFloat{}, kWords6), 48) == "1");
    CHECK(format_decimal(log(BigFloat::from_int(2, PrecisionContext{}), PrecisionContext{}), 8) == "0.69314718");
    CHECK_THROWS_AS(log(BigFloat::from_int(-1, kWords6), kWords6), Error);
    CHECK_THROWS_AS(log(BigFloat{}, kWords6), Error);
    try {
        log(BigFloat::from_int(-1, kWords6), kWords6);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("log") != std::string::npos);
        CHECK(std::string(e.what()).find("-1") != std::string::npos);
    }
}

TEST_CASE("BBP pi") {
    CHECK(format_decimal(pi_bbp(PrecisionContext{2, 16}), 16) == "3.141592653589793");
    CHECK(format_decimal(pi_bbp(kWords6), 48) == "3.14159265358979323846264338327950288419716939938");
    // k = 0 term alone: 4 - 2/4 - 1/5 - 1/6 = 47/15.
    BigFloat first = pi_bbp_partial(1, kWords6);
    CHECK(format_decimal(first, 20) == "3.1333333333333333333");
    // Deeper precision matches the reference constant.
    PrecisionContext deep{32, 300};
    CHECK(ulp_error(pi_bbp(PrecisionContext{10, 80}), boost::math::constants::pi<Ref>()) <= 1.0);
    CHECK(format_decimal(pi_bbp(deep), 60) == "3.14159265358979323846264338327950288419716939937510582097494");
}

using oracle::erfc_quadrature;

TEST_CASE("erfc against Gaussian quadrature") {
    PrecisionContext ctx{};
    BigFloat x = std::get<BigFloat>(parse_decimal("0.57735027", ctx));
    double got = downcast_double(erfc(x, ctx));
    CHECK(std::fabs(got - double(erfc_quadrature(0.57735027L))) < 1e-15);
    CHECK(format_decimal(erfc(x, ctx), 8) == "0.41421618");
    for (double v : {0.1, 0.9, 2.0, 2.9, 3.1, 4.5, 6.0}) {
        double ref = double(erfc_quadrature(v));
        double got_v = downcast_double(erfc(BigFloat::from_double(v, ctx), ctx));
        CHECK(std::fabs(got_v - ref) <= 1e-15 * std::max(ref, 1e-3));
    }
}

TEST_CASE("erfc symmetry and fixed point") {
    PrecisionContext ctx{};
    CHECK(format_decimal(erfc(BigFloat{}, ctx), 8) == "1");
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        BigFloat x = random_in(rng, -5, 5, ctx);
        BigFloat s = add(erfc(x, ctx), erfc(-x, ctx), ctx);
        BigFloat err = sub(s, BigFloat::from_int(2, ctx), ctx).abs();
        CHECK((err.is_zero() || err.exponent() < -250));
    }
}

TEST_CASE("precision monotonicity of transcendental digit strings") {
    BigFloat two4 = BigFloat::from_int(2, PrecisionContext{4, 32});
    for (std::uint32_t k = 2; k < 10; ++k) {
        PrecisionContext lo{k, 8 * k}, hi{k + 1, 8 * (k + 1)};
        std::string a = format_decimal(log(BigFloat::from_int(2, lo), lo), 8 * k);
        std::string b = format_decimal(log(BigFloat::from_int(2, hi), hi), 8 * k);
        CHECK(a == b);
        std::string pa = format_decimal(pi_bbp(lo), 8 * k);
        std::string pb = format_decimal(pi_bbp(hi), 8 * k);
        CHECK(pa == pb);
    }
}
