#pragma once
// Descriptive statistics and one-sample hypothesis tests.
//
// Sums are accumulated exactly and each reported quantity is rounded once,
// so z and t are unchanged by shifting data and mu0 by the same amount.

#include <cstdint>
#include <vector>

#include "apc/bignum/number.hpp"
#include "apc/linalg.hpp"

namespace apc::stats {

Number mean(const NumVector& v, const PrecisionContext& ctx);
// Sample standard deviation (n - 1 denominator).
Number stddev(const NumVector& v, const PrecisionContext& ctx);

inline constexpr double kAlpha = 0.05;

struct ZTestResult {
    std::size_t n = 0;
    Number sample_mean;
    Number mu0;
    Number sigma;
    BigFloat z;
    BigFloat p;  // two-sided
    bool reject = false;
};

ZTestResult ztest(const NumVector& v, const Number& mu0, const Number& sigma,
                  const PrecisionContext& ctx);

struct TTestResult {
    std::size_t n = 0;
    std::uint64_t df = 0;
    Number sample_mean;
    Number mu0;
    BigFloat sd;
    BigFloat t;
    BigFloat p;  // two-sided
    bool reject = false;
};

TTestResult ttest(const NumVector& v, const Number& mu0, const PrecisionContext& ctx);

// Regularized incomplete beta I_x(a, 1/2) with a = a2 / 2, for 0 <= x <= 1.
BigFloat incomplete_beta_half(const BigFloat& x, std::uint64_t a2, const PrecisionContext& ctx);

struct Histogram {
    double lo = 0;
    double width = 1;
    std::vector<std::uint64_t> counts;
};

// Equal-width bins over [min, max]; bins = 0 picks ceil(sqrt(n)).
Histogram histogram(const std::vector<double>& data, std::size_t bins);

}  // namespace apc::stats
