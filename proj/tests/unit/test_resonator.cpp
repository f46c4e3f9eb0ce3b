#include "reslab/lfunc.hpp"
#include "reslab/numth.hpp"
#include "reslab/resonator.hpp"
#include "reslab/special.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace reslab;

TEST_CASE("weight schemes") {
    const auto lin = WeightScheme::linear(10.0);
    CHECK(lin.kind() == SchemeKind::linear);
    CHECK(lin.weight(2) == doctest::Approx(0.8));
    CHECK(lin.weight(7) == doctest::Approx(0.3));
    CHECK(lin.weight(11) == 0.0);
    CHECK(lin.support().size() == 4);
    CHECK_THROWS_AS(lin.weight(9), std::invalid_argument);

    const auto half = WeightScheme::half(10.0);
    CHECK(half.weight(7) == 0.5);
    CHECK(half.weight(11) == 0.0);
    CHECK(half.total() == doctest::Approx(16.0));

    // a prime equal to the cutoff gets weight 0 in the linear scheme
    CHECK(WeightScheme::linear(7.0).support().size() == 3);
    CHECK(WeightScheme::linear(1.5).support().empty());
    CHECK(scheme_kind_from_string("half") == SchemeKind::half);
    CHECK_THROWS(scheme_kind_from_string("cubic"));
}

TEST_CASE("weight and coefficient examples") {
    CHECK(WeightScheme::linear(3.0).weight(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(WeightScheme::linear(3.0).weight(3) == 0.0);
    CHECK(WeightScheme::linear(5.0).coeff(12) == doctest::Approx(0.144).epsilon(1e-14));
    CHECK(WeightScheme::linear(3.0).coeff(6) == 0.0);
    CHECK(WeightScheme::half(7.0).coeff(1) == 1.0);
}

TEST_CASE("coefficients are completely multiplicative") {
    const auto lin = WeightScheme::linear(15.0);
    const auto half = WeightScheme::half(15.0);
    std::size_t bad = 0;
    for (std::uint64_t m = 1; m <= 300; ++m) {
        for (std::uint64_t n = 1; n <= 300; ++n) {
            for (const auto* s : {&lin, &half}) {
                const double lhs = s->coeff(m * n);
                const double rhs = s->coeff(m) * s->coeff(n);
                if (std::fabs(lhs - rhs) > 1e-14 * std::max(1e-300, std::fabs(rhs)))
                    ++bad;
            }
        }
    }
    CHECK(bad == 0);
    CHECK(lin.coeff(1) == 1.0);
    CHECK(lin.coeff(17) == 0.0);
    CHECK(lin.coeff(34) == 0.0);
}

TEST_CASE("toy enumeration q = 7, X = 3") {
    const auto c = enumerate_coeffs(WeightScheme::linear(3.0), 8);
    REQUIRE(c.entries.size() == 4);
    const std::uint64_t ns[] = {1, 2, 4, 8};
    const double ws[] = {1.0, 1.0 / 3.0, 1.0 / 9.0, 1.0 / 27.0};
    for (int i = 0; i < 4; ++i) {
        CHECK(c.entries[i].n == ns[i]);
        CHECK(c.entries[i].weight == doctest::Approx(ws[i]).epsilon(1e-15));
    }
    CHECK(c.partial == doctest::Approx(40.0 / 27.0).epsilon(1e-15));
    CHECK(c.total == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(c.tail_fraction() == doctest::Approx((1.5 - 40.0 / 27.0) / 1.5).epsilon(1e-12));
    CHECK(c.tail == doctest::Approx(0.018518518518518).epsilon(1e-9));
    CHECK_THROWS(enumerate_coeffs(WeightScheme::linear(3.0), 0));

    const auto h = enumerate_coeffs(WeightScheme::half(2.0), 1);
    REQUIRE(h.entries.size() == 1);
    CHECK(h.total == 2.0);
    CHECK(h.tail == 1.0);
}

TEST_CASE("enumeration against direct coefficients") {
    const auto scheme = WeightScheme::linear(15.0);
    const auto c = enumerate_coeffs(scheme, 3000);
    std::size_t idx = 0;
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const double w = scheme.coeff(n);
        if (w == 0.0)
            continue;
        REQUIRE(idx < c.entries.size());
        CHECK(c.entries[idx].n == n);
        CHECK(c.entries[idx].weight == doctest::Approx(w).epsilon(1e-13));
        ++idx;
    }
    CHECK(idx == c.entries.size());
    // tail is nonincreasing in N
    double prev = 1.0;
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
        const double t = enumerate_coeffs(scheme, n).tail_fraction();
        CHECK(t >= 0.0);
        CHECK(t < 1.0);
        CHECK(t <= prev);
        prev = t;
    }
}

TEST_CASE("truncation for a tail target") {
    const auto scheme = WeightScheme::linear(10.0);
    const auto n = truncation_for_tail(scheme, 1e-2);
    CHECK(enumerate_coeffs(scheme, n).tail_fraction() <= 1e-2);
    if (n > 1024)
        CHECK(enumerate_coeffs(scheme, n / 4).tail_fraction() > 1e-2);
}

TEST_CASE("resonator at the principal character") {
    const auto g = build_group(1009);
    for (double x : {3.0, 10.0, 100.0, 1000.0}) {
        const auto scheme = WeightScheme::linear(x);
        const cplx r0 = resonator_value(scheme, g.principal());
        CHECK(std::fabs(log_r0_squared(scheme) - std::log(std::norm(r0))) < 1e-12 * std::max(1.0, log_r0_squared(scheme)));
    }
    CHECK_THROWS(resonator_value(WeightScheme::linear(2000.0), g.principal()));
    CHECK_THROWS(log_r0_squared(WeightScheme::half(10.0)));
}

TEST_CASE("resonator value examples") {
    const auto g7 = build_group(7);
    const cplx r = resonator_value(WeightScheme::linear(3.0), g7.principal());
    CHECK(std::abs(r - 1.5) < 1e-15);
    CHECK(log_r0_squared(WeightScheme::linear(3.0)) == doctest::Approx(std::log(2.25)).epsilon(1e-14));
    CHECK(log_r0_squared(WeightScheme::linear(3.0)) == doctest::Approx(0.810930).epsilon(1e-6));
    CHECK(log_r0_squared(WeightScheme::linear(1.5)) == 0.0);
    // chi(2) = -1 mod 5 for the quartic characters at odd index
    const auto g5 = build_group(5);
    const auto chi = g5.character(2);
    REQUIRE(std::abs(chi(2) + 1.0) < 1e-15);
    CHECK(std::abs(resonator_value(WeightScheme::half(2.0), chi) - 2.0 / 3.0) < 1e-15);
    CHECK(resonator_value(WeightScheme::linear(1.5), g7.character(1)) == cplx{1.0, 0.0});
}

TEST_CASE("series within the tail of the product for every character mod 101") {
    const auto g = build_group(101);
    const auto scheme = WeightScheme::linear(10.0);
    const auto c = enumerate_coeffs(scheme, 10000);
    for (std::uint64_t j = 0; j < 100; ++j) {
        const auto chi = g.character(j);
        ComplexCompensatedSum s;
        for (const auto& [n, w] : c.entries)
            s += w * chi(n);
        CHECK(std::abs(s.value() - resonator_value(scheme, chi)) <= c.tail + 1e-12);
    }
}

TEST_CASE("resonator product equals its truncated series in the limit") {
    const auto g = build_group(101);
    const auto scheme = WeightScheme::linear(6.0);
    const auto chi = g.character(17);
    const auto c = enumerate_coeffs(scheme, std::uint64_t{1} << 40);
    ComplexCompensatedSum s;
    for (const auto& [n, w] : c.entries)
        s += w * chi(n);
    CHECK(std::abs(s.value() - resonator_value(scheme, chi)) <= c.tail + 1e-12);
}

TEST_CASE("Mertens product bounds") {
    CHECK(mertens_product(10.0) == doctest::Approx(4.375).epsilon(1e-15));
    CHECK(mertens_product(2.0) == 2.0);
    for (double x : {10.0, 1e2, 1e3, 1e4, 1e5, 1e6}) {
        const double p = mertens_product(x);
        CHECK(p >= mertens_lower_bound(x));
        CHECK(p <= mertens_upper_bound(x));
    }
    CHECK_THROWS(mertens_product(1.0));
}

TEST_CASE("lower bound product") {
    const auto lbp = lower_bound_product(WeightScheme::linear(1000.0));
    CHECK(lbp.product == doctest::Approx(10.410881425128334).epsilon(1e-12));
    CHECK(lbp.product == doctest::Approx(lbp.mertens_part * lbp.correction).epsilon(1e-12));
    const double l = std::log(1000.0);
    CHECK(lbp.product >= std::exp(euler_gamma) * l * (1.0 - 1.0 / l - 1.0 / (l * l)));
    CHECK(lower_bound_product(WeightScheme::linear(3.0)).product == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(lower_bound_product(WeightScheme::linear(1.5)).product == 1.0);
    CHECK_THROWS(lower_bound_product(WeightScheme::half(10.0)));
}

TEST_CASE("correction factor is bounded prime by prime") {
    // -log((p-1)/(p-q_p)) <= 1/X + 2/(pX)
    for (double x : {10.0, 100.0, 1000.0, 1e4}) {
        const auto scheme = WeightScheme::linear(x);
        double total = 0.0;
        double budget = 0.0;
        for (const auto& [p, w] : scheme.support()) {
            const double pd = static_cast<double>(p);
            const double term = -std::log((pd - 1.0) / (pd - w));
            CHECK(term <= 1.0 / x + 2.0 / (pd * x));
            total += term;
            budget += 1.0 / x + 2.0 / (pd * x);
        }
        CHECK(-std::log(lower_bound_product(scheme).correction) == doctest::Approx(total).epsilon(1e-10));
        CHECK(total <= budget);
    }
}

TEST_CASE("second moment product") {
    const auto m = second_moment_product(WeightScheme::linear(1e4));
    CHECK(m.log_product == doctest::Approx(922.33181912054979).epsilon(1e-12));
    CHECK(std::isinf(m.product));
    REQUIRE(m.log_comparator);
    // log product / comparator falls toward 1 over decades
    double prev = 1e9;
    for (double x : {1e4, 1e5, 1e6}) {
        const auto s = second_moment_product(WeightScheme::linear(x));
        const double ratio = s.log_product / *s.log_comparator;
        CHECK(ratio > 1.0);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK_FALSE(second_moment_product(WeightScheme::half(10.0)).log_comparator);
    CHECK(second_moment_product(WeightScheme::linear(3.0)).product == doctest::Approx(1.125).epsilon(1e-15));
    CHECK(second_moment_product(WeightScheme::half(2.0)).product == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("J integral") {
    // mpmath quad references
    const auto j10 = j_integral(10.0);
    CHECK(j10.j1 == doctest::Approx(0.35835651920202829).epsilon(1e-10));
    CHECK(j10.j2 == 0.0);
    const auto j100 = j_integral(100.0);
    CHECK(j100.j1 == doctest::Approx(0.18012931958333907).epsilon(1e-10));
    CHECK(j100.j2 == doctest::Approx(0.012241337152868255).epsilon(1e-9));
    const auto j4 = j_integral(1e4);
    CHECK(j4.j1 == doctest::Approx(0.082659995880657832).epsilon(1e-10));
    CHECK(j4.j2 == doctest::Approx(0.0016488858965540844).epsilon(1e-9));
    // J1 ~ log 2 / log X
    CHECK(std::fabs(j4.j1 * std::log(1e4) / std::log(2.0) - 1.0) < 0.1);
    CHECK(j_integral(1e6).j2 * std::pow(std::log(1e6), 2) <= 10.0);
    CHECK(j_integral(1e6).j2 * std::pow(std::log(1e6), 2) == doctest::Approx(0.0679587269017287).epsilon(1e-8));
    CHECK(j_integral(100.0).j > j_integral(1000.0).j);
    CHECK(j_integral(1000.0).j > j_integral(1e4).j);
    CHECK_THROWS(j_integral(9.0));
}
