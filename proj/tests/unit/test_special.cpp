#include "reslab/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace reslab;

// Reference values from mpmath at 30 digits.
TEST_CASE("digamma known values") {
    CHECK(std::fabs(digamma(1.0) + euler_gamma) < 1e-14);
    CHECK(std::fabs(digamma(0.5) - (-1.963510026021423479)) < 1e-14);
    CHECK(std::fabs(digamma(0.001) - (-1000.5755719318103005)) < 1e-10);
    CHECK(std::fabs(digamma(7.25) - 1.9104535268837360284) < 1e-14);
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(digamma(-1.5), std::domain_error);
}

TEST_CASE("digamma recurrence") {
    for (double x : {0.01, 0.3, 1.7, 4.2, 9.9, 25.0})
        CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12 * std::max(1.0, 1.0 / x));
}

TEST_CASE("Hurwitz zeta known values") {
    const auto z1 = hurwitz_zeta(0.75, 1.0);
    CHECK(std::fabs(z1.value - (-3.4412853869452228944)) < 1e-12);
    CHECK(z1.error < 1e-12);
    CHECK(std::fabs(hurwitz_zeta(2.0, 0.5).value - std::numbers::pi * std::numbers::pi / 2.0) < 1e-13);
    CHECK(std::fabs(hurwitz_zeta(0.75, 0.3).value - (-1.3555923313294102429)) < 1e-12);
    CHECK(std::fabs(hurwitz_zeta(0.6, 0.01).value - 13.882618084974639409) < 1e-11);
    CHECK(std::fabs(hurwitz_zeta(0.9, 1.0).value - (-9.4301140194022545911)) < 1e-11);
}

TEST_CASE("Hurwitz zeta half-shift identity") {
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (double s : {0.55, 0.75, 0.95, 1.5}) {
        const double lhs = hurwitz_zeta(s, 0.5).value;
        const double rhs = (std::pow(2.0, s) - 1.0) * hurwitz_zeta(s, 1.0).value;
        CHECK(std::fabs(lhs - rhs) < 1e-11 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("Hurwitz zeta error estimate covers the truth") {
    const auto z = hurwitz_zeta(0.75, 1.0);
    CHECK(std::fabs(z.value - (-3.4412853869452228944)) <= z.error + 1e-15);
    CHECK(hurwitz_terms(0.75) == 40);
    CHECK(hurwitz_terms(0.99) == 30);
}

TEST_CASE("Hurwitz zeta domain") {
    CHECK_THROWS(hurwitz_zeta(0.5, 0.5));
    CHECK_THROWS(hurwitz_zeta(1.0, 0.5));
    CHECK_THROWS(hurwitz_zeta(0.75, 0.0));
    CHECK_THROWS(hurwitz_zeta(0.75, 1.5));
}
