#include "reslab/lfunc.hpp"

#include <limits>
#include <string>

namespace reslab {

SigmaPoint::SigmaPoint(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.5) || sigma > 1.0)
        throw std::domain_error("sigma must lie in (1/2, 1], got " + std::to_string(sigma));
}

std::string_view to_string(LMethod method) {
    switch (method) {
    case LMethod::digamma:
        return "digamma";
    case LMethod::hurwitz:
        return "hurwitz";
    case LMethod::euler_product:
        return "euler_product";
    case LMethod::dirichlet_series:
        return "dirichlet_series";
    }
    return "unknown";
}

namespace detail {

LBackendTable l_backend_table(std::uint64_t q, SigmaPoint sigma) {
    LBackendTable table;
    table.values.resize(q - 1);
    table.errors.resize(q - 1);
    const double qd = static_cast<double>(q);
    if (sigma.is_one()) {
        table.method = LMethod::digamma;
        table.scale = -1.0 / qd;
        for (std::uint64_t a = 1; a < q; ++a) {
            const double v = digamma(static_cast<double>(a) / qd);
            table.values[a - 1] = v;
            table.errors[a - 1] = 1e-13 * std::max(1.0, std::fabs(v));
        }
    } else {
        table.method = LMethod::hurwitz;
        table.scale = std::pow(qd, -sigma.value());
        for (std::uint64_t a = 1; a < q; ++a) {
            const auto z = hurwitz_zeta(sigma.value(), static_cast<double>(a) / qd);
            table.values[a - 1] = z.value;
            table.errors[a - 1] = z.error;
        }
    }
    return table;
}

} // namespace detail

std::vector<LValue> l_value_batch(const CharacterGroup& group, SigmaPoint sigma) {
    const std::uint64_t q = group.modulus();
    const auto table = detail::l_backend_table(q, sigma);
    const auto transformed = dft_over_group(group, std::span<const double>(table.values));

    double err = 0.0;
    double magnitude = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
        err += table.errors[a - 1];
        magnitude += std::fabs(table.values[a - 1]);
    }
    // DFT rounding grows like log n; 64 eps is a comfortable envelope for
    // the sizes used here.
    const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
    const double err_total = std::fabs(table.scale) * (err + rounding);

    std::vector<LValue> out;
    out.reserve(q - 2);
    for (std::uint64_t j = 1; j < q - 1; ++j)
        out.push_back({j, sigma.value(), table.scale * transformed[j], table.method, err_total});
    return out;
}

std::vector<cplx> prime_sum_batch(const CharacterGroup& group, double sigma, double x_cutoff) {
    const std::uint64_t q = group.modulus();
    std::vector<CompensatedSum> by_residue(q);
    if (x_cutoff >= 2.0) {
        for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x_cutoff)).primes)
            by_residue[p % q] += detail::powm(p, sigma);
    }
    std::vector<double> f(q - 1);
    for (std::uint64_t a = 1; a < q; ++a)
        f[a - 1] = by_residue[a].value();
    return dft_over_group(group, std::span<const double>(f));
}

ApproxCensus approx_error_census(const CharacterGroup& group, const std::vector<LValue>& l_values, double sigma,
                                 double x_cutoff, double tol) {
    const std::uint64_t q = group.modulus();
    if (l_values.size() != q - 2)
        throw std::invalid_argument("approx_error_census: expected one L-value per non-principal character");
    const auto sums = prime_sum_batch(group, sigma, x_cutoff);

    ApproxCensus census;
    census.deviations.resize(q - 2);
    CompensatedSum total;
    for (std::uint64_t j = 1; j < q - 1; ++j) {
        const double deviation = std::fabs(std::log(std::abs(l_values[j - 1].value)) - sums[j].real());
        census.deviations[j - 1] = deviation;
        census.max_deviation = std::max(census.max_deviation, deviation);
        total += deviation;
        if (deviation > tol)
            census.bad.push_back(j);
    }
    census.mean_deviation = q > 2 ? total.value() / static_cast<double>(q - 2) : 0.0;
    return census;
}

ApproxCensus approx_error_census(const CharacterGroup& group, SigmaPoint sigma, double x_cutoff, double tol) {
    if (!(tol >= 0.0))
        throw std::invalid_argument("approx_error_census: tol must be nonnegative");
    return approx_error_census(group, l_value_batch(group, sigma), sigma.value(), x_cutoff, tol);
}

} // namespace reslab
