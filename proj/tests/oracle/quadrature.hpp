#pragma once
// Numerical-integration oracles for tail probabilities, in long double.

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>

namespace oracle {

// Gauss-Legendre on [a, b] split into panels.
template <class F>
long double integrate(F f, long double a, long double b, int panels) {
    static const long double x[5] = {0.0L, 0.5384693101056830910363144L, -0.5384693101056830910363144L,
                                     0.9061798459386639927976269L, -0.9061798459386639927976269L};
    static const long double w[5] = {0.5688888888888888888888889L, 0.4786286704993664680412915L,
                                     0.4786286704993664680412915L, 0.2369268850561890875142640L,
                                     0.2369268850561890875142640L};
    long double h = (b - a) / panels, sum = 0;
    for (int p = 0; p < panels; ++p) {
        long double mid = a + (p + 0.5L) * h;
        for (int i = 0; i < 5; ++i) sum += w[i] * f(mid + 0.5L * h * x[i]);
    }
    return sum * h * 0.5L;
}

// erfc(x) = 1 - 2/sqrt(pi) * int_0^x e^{-t^2} dt
// Beyond x = 1 the tail is integrated directly to keep relative accuracy.
inline long double erfc_quadrature(long double x) {
    const long double two_over_sqrt_pi = 1.1283791670955125738961589L;
    auto kernel = [](long double t) { return std::exp(-t * t); };
    if (x > 1.0L) return two_over_sqrt_pi * integrate(kernel, x, x + 12.0L, 2000);
    return 1.0L - two_over_sqrt_pi * integrate(kernel, 0.0L, x, 400);
}

// Two-sided Student-t tail 2 * int_|t|^inf f_df(s) ds.
inline long double student_t_two_sided(long double t, long double df) {
    const long double log_norm = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) -
                                 0.5L * std::log(df * 3.14159265358979323846264338327950288L);
    auto density = [&](long double s) {
        return std::exp(log_norm - (df + 1) / 2 * std::log1p(s * s / df));
    };
    boost::math::quadrature::exp_sinh<long double> integrator;
    return 2 * integrator.integrate([&](long double u) { return density(std::fabs(t) + u); });
}

}  // namespace oracle
