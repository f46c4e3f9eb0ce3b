#pragma once

#include "reslab/chargroup.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace reslab {

enum class SchemeKind {
    linear, // q_p = 1 - p/X for p <= X
    half,   // q_p = 1/2 for p <= Y
};

std::string_view to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(std::string_view name);

struct PrimeWeight {
    std::uint64_t prime;
    double weight;
};

// Completely multiplicative resonator weights: q_1 = 1, q_p as per kind for
// primes up to the cutoff, q_p = 0 above it.
class WeightScheme {
public:
    static WeightScheme linear(double x_cutoff);
    static WeightScheme half(double y_cutoff);

    SchemeKind kind() const { return kind_; }
    double cutoff() const { return cutoff_; }

    // Throws std::invalid_argument if p is not prime.
    double weight(std::uint64_t p) const;
    double coeff(std::uint64_t n) const;

    // Primes with q_p > 0, ascending.
    const std::vector<PrimeWeight>& support() const { return support_; }

    // sum_n q_n = prod_p (1 - q_p)^{-1}.
    double total() const;

private:
    WeightScheme(SchemeKind kind, double cutoff);
    double prime_weight(std::uint64_t p) const;

    SchemeKind kind_;
    double cutoff_;
    std::vector<PrimeWeight> support_;
};

// R(chi) = prod_{p <= cutoff} (1 - q_p chi(p))^{-1}. The cutoff must be below
// the modulus so that every retained prime is coprime to q.
template <CharacterLike C>
cplx resonator_value(const WeightScheme& scheme, const C& chi) {
    if (!(scheme.cutoff() < static_cast<double>(chi.modulus())))
        throw std::invalid_argument("resonator_value: prime cutoff must be below the modulus");
    cplx product{1.0, 0.0};
    for (const auto& [p, w] : scheme.support())
        product /= (1.0 - w * chi(p));
    return product;
}

struct CoeffEntry {
    std::uint64_t n;
    double weight;
};

// The resonator series sum_n q_n chi(n) truncated at n <= limit, with exact
// tail accounting (all q_n > 0, so total - partial is a true tail).
struct ResonatorCoeffs {
    WeightScheme scheme;
    std::uint64_t limit = 0;
    std::vector<CoeffEntry> entries; // ascending n, q_n > 0
    double partial = 0.0;
    double total = 0.0;
    double tail = 0.0;

    double tail_fraction() const { return total > 0.0 ? tail / total : 0.0; }
};

ResonatorCoeffs enumerate_coeffs(const WeightScheme& scheme, std::uint64_t limit);

// Smallest limit of the form 2^k (capped at max_limit) whose tail fraction
// does not exceed max_tail_fraction.
std::uint64_t truncation_for_tail(const WeightScheme& scheme, double max_tail_fraction,
                                  std::uint64_t max_limit = std::uint64_t{1} << 50);

// 2 sum_{p <= X} (log X - log p) = log |R(chi_0)|^2 for the linear scheme.
double log_r0_squared(const WeightScheme& scheme);

struct LowerBoundProduct {
    double product = 1.0;     // prod (1 - q_p/p)^{-1}
    double mertens_part = 1.0; // prod (1 - 1/p)^{-1}
    double correction = 1.0;  // prod (p - 1)/(p - q_p)
};

// sum_k a_k q_k over X-smooth k, with a_k = 1/k, in closed form. Linear only.
LowerBoundProduct lower_bound_product(const WeightScheme& scheme);

// prod_{p <= X} (1 - 1/p)^{-1}, X >= 2.
double mertens_product(double x_cutoff);
// e^gamma log X (1 -+ 1/(2 log^2 X)).
double mertens_lower_bound(double x_cutoff);
double mertens_upper_bound(double x_cutoff);

// Logs are kept because the product overflows a double beyond X ~ 7000.
struct SecondMoment {
    double log_product = 0.0;             // log prod (1 - q_p^2)^{-1}
    double product = 1.0;                 // may be +inf
    std::optional<double> log_comparator; // (2 - log 4) X / log X, linear only
};

SecondMoment second_moment_product(const WeightScheme& scheme);

struct JIntegral {
    double j = 0.0;
    double j1 = 0.0;
    double j2 = 0.0;
};

// J = int_1^{2-2/X} dt / ((log(2-t) + log X) t), split at 2 - (log X)^{-2}.
// Requires X >= 10. When 2-(log X)^{-2} exceeds 2-2/X (10 <= X < 14) the split
// is clamped to the upper limit and J2 = 0.
JIntegral j_integral(double x_cutoff);

} // namespace reslab
