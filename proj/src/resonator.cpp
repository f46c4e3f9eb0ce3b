#include "reslab/resonator.hpp"

#include "reslab/numth.hpp"
#include "reslab/special.hpp"
#include "reslab/summation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace reslab {

std::string_view to_string(SchemeKind kind) { return kind == SchemeKind::linear ? "linear" : "half"; }

SchemeKind scheme_kind_from_string(std::string_view name) {
    if (name == "linear")
        return SchemeKind::linear;
    if (name == "half")
        return SchemeKind::half;
    throw std::invalid_argument("unknown weight scheme '" + std::string(name) + "'");
}

WeightScheme::WeightScheme(SchemeKind kind, double cutoff) : kind_(kind), cutoff_(cutoff) {
    if (!std::isfinite(cutoff) || cutoff < 0.0)
        throw std::invalid_argument("weight scheme cutoff must be finite and nonnegative");
    if (cutoff >= 2.0) {
        for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(cutoff)).primes) {
            const double w = prime_weight(p);
            if (w > 0.0)
                support_.push_back({p, w});
        }
    }
}

WeightScheme WeightScheme::linear(double x_cutoff) { return {SchemeKind::linear, x_cutoff}; }

WeightScheme WeightScheme::half(double y_cutoff) { return {SchemeKind::half, y_cutoff}; }

double WeightScheme::prime_weight(std::uint64_t p) const {
    const double pd = static_cast<double>(p);
    if (pd > cutoff_)
        return 0.0;
    return kind_ == SchemeKind::linear ? 1.0 - pd / cutoff_ : 0.5;
}

double WeightScheme::weight(std::uint64_t p) const {
    if (!is_prime(p))
        throw std::invalid_argument("weight: " + std::to_string(p) + " is not prime");
    return prime_weight(p);
}

double WeightScheme::coeff(std::uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("coeff: n must be positive");
    double value = 1.0;
    for (const auto& [p, e] : factorize(n).factors) {
        const double w = prime_weight(p);
        if (w == 0.0)
            return 0.0;
        value *= std::pow(w, static_cast<double>(e));
    }
    return value;
}

double WeightScheme::total() const {
    double product = 1.0;
    for (const auto& [p, w] : support_)
        product /= (1.0 - w);
    return product;
}

ResonatorCoeffs enumerate_coeffs(const WeightScheme& scheme, std::uint64_t limit) {
    if (limit == 0)
        throw std::invalid_argument("enumerate_coeffs: truncation limit must be at least 1");
    ResonatorCoeffs out{scheme, limit, {{1, 1.0}}, 0.0, scheme.total(), 0.0};
    for (const auto& [p, w] : scheme.support()) {
        if (p > limit)
            break;
        const std::size_t existing = out.entries.size();
        for (std::size_t i = 0; i < existing; ++i) {
            auto [n, value] = out.entries[i];
            while (n <= limit / p) {
                n *= p;
                value *= w;
                out.entries.push_back({n, value});
            }
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const CoeffEntry& a, const CoeffEntry& b) { return a.n < b.n; });

    CompensatedSum partial;
    for (const auto& e : out.entries)
        partial += e.weight;
    out.partial = partial.value();
    // exact up to rounding; a negative difference can only be rounding
    out.tail = std::max(0.0, out.total - out.partial);
    return out;
}

std::uint64_t truncation_for_tail(const WeightScheme& scheme, double max_tail_fraction, std::uint64_t max_limit) {
    std::uint64_t limit = 1024;
    while (true) {
        const auto coeffs = enumerate_coeffs(scheme, limit);
        if (coeffs.tail_fraction() <= max_tail_fraction || limit >= max_limit)
            return limit;
        limit = std::min(limit * 4, max_limit);
    }
}

double log_r0_squared(const WeightScheme& scheme) {
    if (scheme.kind() != SchemeKind::linear)
        throw std::invalid_argument("log_r0_squared: identity holds only for the linear scheme");
    const double x = scheme.cutoff();
    if (x < 2.0)
        return 0.0;
    const double log_x = std::log(x);
    CompensatedSum sum;
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x)).primes)
        sum += log_x - std::log(static_cast<double>(p));
    return 2.0 * sum.value();
}

LowerBoundProduct lower_bound_product(const WeightScheme& scheme) {
    if (scheme.kind() != SchemeKind::linear)
        throw std::invalid_argument("lower_bound_product: defined for the linear scheme");
    LowerBoundProduct out;
    const double x = scheme.cutoff();
    if (x < 2.0)
        return out;
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x)).primes) {
        const double pd = static_cast<double>(p);
        const double qp = scheme.weight(p);
        out.product /= (1.0 - qp / pd);
        out.mertens_part /= (1.0 - 1.0 / pd);
        out.correction *= (pd - 1.0) / (pd - qp);
    }
    return out;
}

double mertens_product(double x_cutoff) {
    if (!(x_cutoff >= 2.0))
        throw std::invalid_argument("mertens_product: X must be at least 2");
    double product = 1.0;
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x_cutoff)).primes)
        product /= (1.0 - 1.0 / static_cast<double>(p));
    return product;
}

double mertens_lower_bound(double x_cutoff) {
    const double l = std::log(x_cutoff);
    return std::exp(euler_gamma) * l * (1.0 - 1.0 / (2.0 * l * l));
}

double mertens_upper_bound(double x_cutoff) {
    const double l = std::log(x_cutoff);
    return std::exp(euler_gamma) * l * (1.0 + 1.0 / (2.0 * l * l));
}

SecondMoment second_moment_product(const WeightScheme& scheme) {
    SecondMoment out;
    CompensatedSum log_product;
    for (const auto& [p, w] : scheme.support())
        log_product += -std::log1p(-w * w);
    out.log_product = log_product.value();
    out.product = std::exp(out.log_product);
    if (scheme.kind() == SchemeKind::linear && scheme.cutoff() > 1.0) {
        const double x = scheme.cutoff();
        out.log_comparator = (2.0 - std::log(4.0)) * x / std::log(x);
    }
    return out;
}

JIntegral j_integral(double x_cutoff) {
    if (!(x_cutoff >= 10.0))
        throw std::invalid_argument("j_integral: X must be at least 10");
    const double log_x = std::log(x_cutoff);
    // u = log(2 - t) removes the steep layer at the upper limit:
    //   J = int_{log(2/X)}^{0} e^u du / ((u + log X)(2 - e^u))
    auto integrand = [log_x](double u) {
        const double e = std::exp(u);
        return e / ((u + log_x) * (2.0 - e));
    };
    const double u_upper_t = std::log(2.0 / x_cutoff);
    // for 10 <= X < 14 the nominal split lies beyond the upper limit
    const double u_split = std::max(-2.0 * std::log(log_x), u_upper_t);

    using boost::math::quadrature::gauss_kronrod;
    constexpr double tol = 1e-12;
    constexpr unsigned max_depth = 15;
    JIntegral out;
    out.j1 = gauss_kronrod<double, 61>::integrate(integrand, u_split, 0.0, max_depth, tol);
    if (u_split > u_upper_t)
        out.j2 = gauss_kronrod<double, 61>::integrate(integrand, u_upper_t, u_split, max_depth, tol);
    out.j = out.j1 + out.j2;
    return out;
}

} // namespace reslab
