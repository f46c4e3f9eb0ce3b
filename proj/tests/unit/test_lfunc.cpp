#include "reslab/lfunc.hpp"
#include "reslab/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace reslab;

namespace {

const ResidueCharacter chi_mod3(3, {0.0, 1.0, -1.0});
const ResidueCharacter chi_mod4(4, {0.0, 1.0, 0.0, -1.0});

} // namespace

TEST_CASE("sigma range") {
    CHECK_THROWS_AS(SigmaPoint(0.5), std::domain_error);
    CHECK_THROWS_AS(SigmaPoint(1.01), std::domain_error);
    CHECK_NOTHROW(SigmaPoint(0.51));
    CHECK(SigmaPoint(1.0).is_one());
}

TEST_CASE("closed-form L(1) values") {
    const double pi = std::numbers::pi;
    const auto l3 = l_value(chi_mod3, SigmaPoint(1.0));
    CHECK(std::fabs(l3.value.real() - pi / (3.0 * std::sqrt(3.0))) < 1e-10);
    CHECK(std::fabs(l3.value.imag()) < 1e-14);
    CHECK(l3.method == LMethod::digamma);
    const auto l4 = l_value(chi_mod4, SigmaPoint(1.0));
    CHECK(std::fabs(l4.value.real() - pi / 4.0) < 1e-10);

    // class number one: L(1, (./7)) = pi / sqrt 7; index 3 is the quadratic character
    const auto g7 = build_group(7);
    const auto l7 = l_value(g7.character(3), SigmaPoint(1.0));
    CHECK(std::fabs(l7.value.real() - pi / std::sqrt(7.0)) < 1e-10);
    CHECK(l7.index == 3);
}

TEST_CASE("values below sigma = 1") {
    // mpmath dirichlet(0.75, ...)
    const auto b = l_value(chi_mod4, SigmaPoint(0.75));
    CHECK(b.method == LMethod::hurwitz);
    CHECK(std::fabs(b.value.real() - 0.73210721762739718388) < 1e-10);
    CHECK(b.err_estimate < 1e-10);
    const auto l3 = l_value(chi_mod3, SigmaPoint(0.75));
    CHECK(std::fabs(l3.value.real() - 0.54583785963459051359) < 1e-10);
}

TEST_CASE("principal character pole") {
    const auto g = build_group(7);
    CHECK_THROWS_AS(l_value(g.principal(), SigmaPoint(1.0)), std::domain_error);
    CHECK_NOTHROW(l_value(g.principal(), SigmaPoint(0.75)));
}

TEST_CASE("batch agrees with single evaluation and conjugation") {
    const auto g = build_group(101);
    for (double s : {1.0, 0.75}) {
        const auto batch = l_value_batch(g, SigmaPoint(s));
        REQUIRE(batch.size() == 99);
        for (std::uint64_t j : {1ULL, 2ULL, 50ULL, 97ULL}) {
            const auto single = l_value(g.character(j), SigmaPoint(s));
            CHECK(batch[j - 1].index == j);
            CHECK(std::abs(batch[j - 1].value - single.value) < 1e-11);
            const auto conj = batch[g.conjugate_index(j) - 1].value;
            CHECK(std::abs(conj - std::conj(batch[j - 1].value)) < 1e-11);
        }
    }
}

TEST_CASE("digamma route against partial-summation series") {
    const auto g = build_group(101);
    const auto batch = l_value_batch(g, SigmaPoint(1.0));
    for (std::uint64_t j = 1; j < 100; j += 7) {
        const auto est = oracle::abel_l_one(g.character(j), 101 * 2000);
        CHECK(est.error < 1e-7);
        CHECK(std::abs(est.value - batch[j - 1].value) < 1e-7);
    }
}

TEST_CASE("finite Euler products and prime sums") {
    const auto g = build_group(101);
    const auto chi = g.character(5);
    // below X = 4 no prime powers beyond primes appear
    CHECK(std::abs(dirichlet_poly(chi, 1.0, 3.5) - prime_sum(chi, 1.0, 3.5)) < 1e-15);
    const cplx by_hand = chi(2) / 2.0 + chi(3) / 3.0 + chi(4) / 8.0 + chi(5) / 5.0;
    CHECK(std::abs(dirichlet_poly(chi, 1.0, 5.0) - by_hand) < 1e-15);
    const cplx product = 1.0 / ((1.0 - chi(2) / 2.0) * (1.0 - chi(3) / 3.0));
    CHECK(std::abs(euler_product_truncated(chi, 1.0, 3.0) - product) < 1e-15);
    CHECK(prime_sum(chi, 1.0, 1.5) == cplx{0.0, 0.0});
    CHECK_THROWS(euler_product_truncated(chi, 1.0, 1.5));
    CHECK_THROWS(dirichlet_poly(chi, 1.0, 1.0));

    // Euler product converges to L(1, chi_4) slowly
    const double e = euler_product_truncated(chi_mod4, 1.0, 1e6).real();
    CHECK(std::fabs(e - std::numbers::pi / 4.0) < 1e-3);

    const auto batch = prime_sum_batch(g, 0.75, 500.0);
    REQUIRE(batch.size() == 100);
    for (std::uint64_t j : {0ULL, 3ULL, 64ULL})
        CHECK(std::abs(batch[j] - prime_sum(g.character(j), 0.75, 500.0)) < 1e-11);
}

TEST_CASE("approximation census") {
    const auto g = build_group(101);
    const auto none = approx_error_census(g, SigmaPoint(0.75), 1000.0, 1e9);
    CHECK(none.bad.empty());
    CHECK(none.deviations.size() == 99);
    const auto all = approx_error_census(g, SigmaPoint(0.75), 1000.0, 0.0);
    CHECK(all.bad.size() == 99);
    CHECK(std::is_sorted(all.bad.begin(), all.bad.end()));
    CHECK(none.max_deviation >= none.mean_deviation);
    CHECK_THROWS(approx_error_census(g, SigmaPoint(0.75), 1000.0, -1.0));
    // deviation by definition for one character
    const auto l = l_value(g.character(10), SigmaPoint(0.75)).value;
    const double dev = std::fabs(std::log(std::abs(l)) - prime_sum(g.character(10), 0.75, 1000.0).real());
    CHECK(std::fabs(none.deviations[9] - dev) < 1e-10);
}
