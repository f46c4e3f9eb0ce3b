#include "reslab/special.hpp"

#include "reslab/summation.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace reslab {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k)!, k = 1..5
constexpr std::array<double, 5> bernoulli_over_factorial{
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
};

} // namespace

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive");

    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ log x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
    const double inv2 = 1.0 / (x * x);
    const double series =
        inv2 * (1.0 / 12.0 -
                 inv2 * (1.0 / 120.0 -
                         inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    return shift + std::log(x) - 0.5 / x - series;
}

int hurwitz_terms(double s) {
    return static_cast<int>(std::max(30.0, std::ceil(10.0 / (s - 0.5))));
}

Estimate hurwitz_zeta(double s, double x) {
    if (!(s > 0.5))
        throw std::domain_error("hurwitz_zeta: s must exceed 1/2");
    if (s == 1.0)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(x > 0.0) || x > 1.0)
        throw std::domain_error("hurwitz_zeta: x must lie in (0, 1]");

    const int m = hurwitz_terms(s);
    CompensatedSum head;
    double magnitude = 0.0;
    for (int n = m - 1; n >= 0; --n) {
        const double term = std::pow(n + x, -s);
        head += term;
        magnitude += term;
    }

    const double base = m + x;
    const double base_pow = std::pow(base, -s);
    double total = head.value() + base * base_pow / (s - 1.0) + 0.5 * base_pow;

    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * base^{-s-2k+1}
    double rising = s;
    double power = base_pow / base;
    for (int k = 0; k < 4; ++k) {
        total += bernoulli_over_factorial[k] * rising * power;
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
        power /= base * base;
    }
    const double truncation = std::fabs(bernoulli_over_factorial[4] * rising * power);
    const double rounding = 4.0 * eps * (magnitude + std::fabs(total) + std::fabs(base * base_pow / (s - 1.0)));
    return {total, truncation + rounding};
}

} // namespace reslab
