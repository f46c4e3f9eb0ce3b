#pragma once

#include "reslab/chargroup.hpp"
#include "reslab/numth.hpp"
#include "reslab/special.hpp"
#include "reslab/summation.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace reslab {

// sigma in (1/2, 1]. sigma = 1/2 is rejected.
class SigmaPoint {
public:
    explicit SigmaPoint(double sigma);
    double value() const { return sigma_; }
    bool is_one() const { return sigma_ == 1.0; }

private:
    double sigma_;
};

enum class LMethod { digamma, hurwitz, euler_product, dirichlet_series };

std::string_view to_string(LMethod method);

struct LValue {
    std::uint64_t index = 0; // character index (0 for fixture characters)
    double sigma = 1.0;
    cplx value;
    LMethod method = LMethod::digamma;
    double err_estimate = 0.0;
};

namespace detail {

// f(a) = psi(a/q) (sigma = 1) or zeta(sigma, a/q) (sigma < 1), a = 1..q-1,
// together with per-entry error bounds and the outer scale factor.
struct LBackendTable {
    std::vector<double> values;
    std::vector<double> errors;
    double scale;
    LMethod method;
};

LBackendTable l_backend_table(std::uint64_t q, SigmaPoint sigma);

inline double powm(std::uint64_t n, double sigma) { return std::pow(static_cast<double>(n), -sigma); }

} // namespace detail

// L(sigma, chi) from the finite formulas
//   sigma = 1: -(1/q) sum_a chi(a) psi(a/q)
//   sigma < 1: q^{-sigma} sum_a chi(a) zeta(sigma, a/q).
// Throws std::domain_error for a principal character at sigma = 1.
template <CharacterLike C>
LValue l_value(const C& chi, SigmaPoint sigma, std::uint64_t index = 0) {
    if (sigma.is_one() && chi.is_principal())
        throw std::domain_error("l_value: L(s, chi_0) has a pole at s = 1");
    const std::uint64_t q = chi.modulus();
    const auto table = detail::l_backend_table(q, sigma);
    ComplexCompensatedSum sum;
    double err = 0.0;
    double magnitude = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
        const cplx c = chi(a);
        sum += c * table.values[a - 1];
        err += std::abs(c) * table.errors[a - 1];
        magnitude += std::abs(c * table.values[a - 1]);
    }
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return {index, sigma.value(), table.scale * sum.value(), table.method, std::abs(table.scale) * (err + rounding)};
}

inline LValue l_value(const Character& chi, SigmaPoint sigma) {
    return l_value<Character>(chi, sigma, chi.index());
}

// L(sigma, chi) for every non-principal chi of the group (indices 1..q-2),
// from a single group DFT of the backend table.
std::vector<LValue> l_value_batch(const CharacterGroup& group, SigmaPoint sigma);

// prod_{p <= X} (1 - chi(p) p^{-sigma})^{-1}; requires X >= 2.
template <CharacterLike C>
cplx euler_product_truncated(const C& chi, double sigma, double x_cutoff) {
    if (!(x_cutoff >= 2.0))
        throw std::invalid_argument("euler_product_truncated: X must be at least 2");
    cplx product{1.0, 0.0};
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x_cutoff)).primes)
        product /= (1.0 - chi(p) * detail::powm(p, sigma));
    return product;
}

// D_chi(sigma, X) = sum_{2 <= n <= X} Lambda(n) chi(n) / (n^sigma log n)
//                 = sum_{p^k <= X} chi(p^k) / (k p^{k sigma}); requires X >= 2.
template <CharacterLike C>
cplx dirichlet_poly(const C& chi, double sigma, double x_cutoff) {
    if (!(x_cutoff >= 2.0))
        throw std::invalid_argument("dirichlet_poly: X must be at least 2");
    const auto limit = static_cast<std::uint64_t>(x_cutoff);
    ComplexCompensatedSum sum;
    for (std::uint64_t p : sieve_primes(limit).primes) {
        std::uint64_t pk = p;
        for (unsigned k = 1;; ++k) {
            sum += chi(pk) * detail::powm(pk, sigma) / static_cast<double>(k);
            if (pk > limit / p)
                break;
            pk *= p;
        }
    }
    return sum.value();
}

// S_chi(sigma, X) = sum_{p <= X} chi(p) p^{-sigma}; empty sum for X < 2.
template <CharacterLike C>
cplx prime_sum(const C& chi, double sigma, double x_cutoff) {
    if (!(x_cutoff >= 2.0))
        return {0.0, 0.0};
    ComplexCompensatedSum sum;
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x_cutoff)).primes)
        sum += chi(p) * detail::powm(p, sigma);
    return sum.value();
}

// S_chi(sigma, X) for all q-1 characters (index j), via one group DFT.
std::vector<cplx> prime_sum_batch(const CharacterGroup& group, double sigma, double x_cutoff);

struct ApproxCensus {
    std::vector<std::uint64_t> bad;        // ascending character indices
    std::vector<double> deviations;        // |log|L| - Re S| for j = 1..q-2 (entry j-1)
    double max_deviation = 0.0;
    double mean_deviation = 0.0;
};

// Characters whose log|L(sigma, chi)| differs from Re S_chi(sigma, X) by more
// than tol. The principal character is never included.
ApproxCensus approx_error_census(const CharacterGroup& group, SigmaPoint sigma, double x_cutoff, double tol);

// Same, reusing precomputed batch L-values (entries for j = 1..q-2).
ApproxCensus approx_error_census(const CharacterGroup& group, const std::vector<LValue>& l_values, double sigma,
                                 double x_cutoff, double tol);

} // namespace reslab
