#pragma once

namespace reslab {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// A value with a rigorous-in-exact-arithmetic truncation bound plus an
// estimate of floating-point rounding.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

// psi(x) for x > 0: upward recurrence until x >= 10, then the asymptotic
// series through B_12. Throws std::domain_error for x <= 0.
double digamma(double x);

// Hurwitz zeta(s, x) = sum_{n>=0} (n+x)^{-s} for real s > 1/2, s != 1,
// 0 < x <= 1 (analytically continued below s = 1).
//
// Euler-Maclaurin with M = max(30, ceil(10/(s - 1/2))) explicit terms, the
// tail integral, and Bernoulli corrections through B_8. For s > 0 the
// summand is completely monotone, so the remainder is bounded by the first
// omitted (B_10) term; that bound plus a rounding estimate is returned.
Estimate hurwitz_zeta(double s, double x);

// Number of explicit terms used by hurwitz_zeta.
int hurwitz_terms(double s);

} // namespace reslab
