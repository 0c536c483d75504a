#include <cmath>
#include <random>

#include "apc/bignum/decimal.hpp"
#include "apc/bignum/elementary.hpp"
#include "apc/errors.hpp"
#include "apc/linalg.hpp"
#include "doctest.h"
#include "oracle/rational.hpp"

using namespace apc;

namespace {

const PrecisionContext kCtx{};  // 256 bits, 8 digits

Number lit(const char* s, const PrecisionContext& ctx = kCtx) { return Number(parse_decimal(s, ctx)); }

NumVector vec(std::initializer_list<const char*> items, const PrecisionContext& ctx = kCtx) {
    std::vector<Number> v;
    for (const char* s : items) v.push_back(lit(s, ctx));
    return NumVector::from(std::move(v), ctx);
}

std::vector<std::string> show(const NumVector& v) {
    std::vector<std::string> out;
    for (const Number& n : v.elements()) out.push_back(n.format(8));
    return out;
}

}  // namespace

TEST_CASE("matrix construction zero-fills row-major") {
    NumVector data = vec({"1", "3.4", "21.6", "19", "-0.1", "10"});
    NumMatrix m = construct_matrix(data, Number::integer(2), Number::integer(3), kCtx);
    CHECK(m.kind() == ElementKind::Float);
    CHECK(m.at(0, 2).format(8) == "21.6");
    CHECK(m.at(1, 0).format(8) == "19");
    NumMatrix m3 = construct_matrix(data, Number::integer(3), Number::integer(3), kCtx);
    for (std::size_t c = 0; c < 3; ++c) CHECK(m3.at(2, c).is_zero());
    // Flattening returns the data padded with zeros, exactly.
    for (std::size_t i = 0; i < 6; ++i) CHECK(compare(m3.data()[i], data[i]) == 0);
    NumMatrix z = construct_matrix(NumVector{}, Number::integer(2), Number::integer(2), kCtx);
    for (const Number& x : z.data()) CHECK(x.is_zero());
    CHECK_THROWS_AS(construct_matrix(data, Number::integer(2), Number::integer(2), kCtx), Error);
    try {
        construct_matrix(data, lit("1.5"), Number::integer(2), kCtx);
        FAIL("expected TypeError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Type);
    }
}

TEST_CASE("vector broadcast and zip") {
    NumVector x = NumVector::from({Number::integer(-1), Number(log(BigFloat::from_int(2, kCtx), kCtx))}, kCtx);
    NumVector r = broadcast(ArithOp::Sub, zip(ArithOp::Add, x, vec({"1", "2"}), kCtx), Number::integer(10), false, kCtx);
    CHECK(show(r) == std::vector<std::string>{"-10", "-7.3068528"});
    NumVector v = vec({"1", "2", "3"});
    CHECK(show(broadcast(ArithOp::Add, v, Number::integer(0), false, kCtx)) == show(v));
    CHECK(show(broadcast(ArithOp::Mul, v, Number::integer(2), false, kCtx)) ==
          std::vector<std::string>{"2", "4", "6"});
    CHECK(show(broadcast(ArithOp::Sub, v, Number::integer(10), true, kCtx)) ==
          std::vector<std::string>{"9", "8", "7"});
    try {
        zip(ArithOp::Add, v, vec({"1"}), kCtx);
        FAIL("expected DimensionError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Dimension);
        CHECK(std::string(e.what()).find("3 and 1") != std::string::npos);
    }
}

TEST_CASE("elementwise map") {
    auto cosf = [](const Number& n) { return Number(cos(n.to_float(kCtx), kCtx)); };
    CHECK(show(map(cosf, vec({"0"}), kCtx)) == std::vector<std::string>{"1"});
    BigFloat e = exp(BigFloat::from_int(1, kCtx), kCtx);
    auto logf = [](const Number& n) { return Number(log(n.to_float(kCtx), kCtx)); };
    NumVector logs = map(logf, NumVector::from({Number::integer(1), Number(e)}, kCtx), kCtx);
    CHECK(show(logs) == std::vector<std::string>{"0", "1"});
    try {
        map(logf, vec({"1", "-2"}), kCtx);
        FAIL("expected DomainError");
    } catch (const Error& e2) {
        CHECK(e2.kind() == ErrorKind::Domain);
        CHECK(std::string(e2.what()).find("component 1") != std::string::npos);
    }
}

TEST_CASE("dotprod") {
    CHECK(dotprod(vec({"1", "-2"}), vec({"-3", "4"}), kCtx).format(8) == "-11");
    CHECK(dotprod(vec({"1", "2"}), vec({"0", "0"}), kCtx).is_zero());
    CHECK_THROWS_AS(dotprod(vec({"1"}), vec({"1", "2"}), kCtx), Error);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-100, 100);
    for (int t = 0; t < 50; ++t) {
        std::vector<Number> a, b;
        oracle::cpp_rational exact = 0;
        for (int i = 0; i < 5; ++i) {
            BigFloat x = BigFloat::from_double(d(rng), kCtx), y = BigFloat::from_double(d(rng), kCtx);
            exact += oracle::to_rational(x) * oracle::to_rational(y);
            a.emplace_back(x);
            b.emplace_back(y);
        }
        NumVector va = NumVector::from(a, kCtx), vb = NumVector::from(b, kCtx);
        Number ab = dotprod(va, vb, kCtx), ba = dotprod(vb, va, kCtx);
        CHECK(ab.as_float() == ba.as_float());
        // Products of doubles are exact at 256 bits; the guarded sum rounds once.
        CHECK(oracle::matches(ab.as_float(), exact, 256));
    }
}

TEST_CASE("append promotes") {
    CHECK(show(append(vec({"1", "-2"}), vec({"5"}), kCtx)) == std::vector<std::string>{"1", "-2", "5"});
    CHECK(show(append(NumVector{}, vec({"1"}), kCtx)) == std::vector<std::string>{"1"});
    NumVector p = append(vec({"1"}), vec({"2.5"}), kCtx);
    CHECK(p.kind() == ElementKind::Float);
    CHECK(p[0].is_float());
}

TEST_CASE("sequence") {
    NumVector s = sequence(Number::integer(-1), Number::integer(1), lit("0.1"), kCtx);
    REQUIRE(s.size() == 21);
    CHECK(s[0].format(8) == "-1");
    CHECK(s[20].format(8) == "1");
    CHECK(s[10].format(8) == "0");
    CHECK(show(sequence(Number::integer(0), Number::integer(0), Number::integer(1), kCtx)) ==
          std::vector<std::string>{"0"});
    CHECK(show(sequence(Number::integer(0), Number::integer(1), lit("0.3"), kCtx)) ==
          std::vector<std::string>{"0", "0.3", "0.6", "0.9"});
    CHECK(sequence(Number::integer(5), Number::integer(1), Number::integer(-2), kCtx).size() == 3);
    CHECK_THROWS_AS(sequence(Number::integer(0), Number::integer(1), Number::integer(0), kCtx), Error);
    CHECK_THROWS_AS(sequence(Number::integer(0), Number::integer(1), Number::integer(-1), kCtx), Error);
}

TEST_CASE("matrix inverse, determinant, trace") {
    PrecisionContext ctx{2, 16};
    NumMatrix m = NumMatrix::from(2, 2, {Number::integer(1), Number::integer(3), Number::integer(-1), Number::integer(4)}, ctx);
    NumMatrix inv = invert(m, ctx);
    // Adjugate: (1/7) [[4, -3], [1, 1]], each entry correctly rounded.
    const oracle::cpp_rational want[4] = {oracle::cpp_rational(4, 7), oracle::cpp_rational(-3, 7),
                                          oracle::cpp_rational(1, 7), oracle::cpp_rational(1, 7)};
    for (int i = 0; i < 4; ++i) CHECK(oracle::matches(inv.data()[std::size_t(i)].as_float(), want[i], 64));
    CHECK(trace(m, ctx).format(8) == "5");
    CHECK(det(m, ctx).format(8) == "7");
    NumMatrix i3 = NumMatrix::identity(3);
    CHECK(det(i3, ctx).format(8) == "1");
    CHECK(trace(i3, ctx).format(8) == "3");
    NumMatrix sing = NumMatrix::from(2, 2, {Number::integer(1), Number::integer(2), Number::integer(2), Number::integer(4)}, ctx);
    try {
        invert(sing, ctx);
        FAIL("expected singular");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
    CHECK(det(sing, ctx).is_zero());
    NumMatrix rect = NumMatrix::from(1, 2, {Number::integer(1), Number::integer(2)}, ctx);
    CHECK_THROWS_AS(invert(rect, ctx), Error);
    CHECK_THROWS_AS(det(rect, ctx), Error);
    CHECK_THROWS_AS(mat_mul(rect, rect, ctx), Error);
}

TEST_CASE("matrix product matches a double triple loop and A*I = A") {
    PrecisionContext ctx{2, 16};
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> d(-5, 5);
    for (int t = 0; t < 20; ++t) {
        double a[3][3], b[3][3];
        std::vector<Number> na, nb;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a[i][j] = d(rng);
                b[i][j] = d(rng);
                na.emplace_back(BigFloat::from_double(a[i][j], ctx));
                nb.emplace_back(BigFloat::from_double(b[i][j], ctx));
            }
        NumMatrix ma = NumMatrix::from(3, 3, na, ctx), mb = NumMatrix::from(3, 3, nb, ctx);
        NumMatrix p = mat_mul(ma, mb, ctx);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double want = 0;
                for (int k = 0; k < 3; ++k) want += a[i][k] * b[k][j];
                CHECK(std::fabs(p.at(std::size_t(i), std::size_t(j)).to_double() - want) < 1e-12);
            }
        NumMatrix ai = mat_mul(ma, NumMatrix::identity(3), ctx);
        for (std::size_t k = 0; k < 9; ++k) CHECK(compare(ai.data()[k], ma.data()[k]) == 0);
        // det(AB) = det(A) det(B)
        double lhs = det(p, ctx).to_double();
        double rhs = det(ma, ctx).to_double() * det(mb, ctx).to_double();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("integer determinant is exact") {
    PrecisionContext ctx{2, 16};
    NumMatrix m = NumMatrix::from(3, 3, {Number::integer(2), Number::integer(-3), Number::integer(1),
                                         Number::integer(2), Number::integer(0), Number::integer(-1),
                                         Number::integer(1), Number::integer(4), Number::integer(5)}, ctx);
    Number d = det(m, ctx);
    REQUIRE(d.is_int());
    CHECK(d.format(8) == "49");
    NumMatrix swapped = NumMatrix::from(2, 2, {Number::integer(0), Number::integer(1), Number::integer(1), Number::integer(0)}, ctx);
    CHECK(det(swapped, ctx).format(8) == "-1");
}
