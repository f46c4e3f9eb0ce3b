#pragma once

#include "reslab/chargroup.hpp"
#include "reslab/resonator.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reslab {

// Resonance sums
//   S2 = sum_chi |R_N(chi)|^2,   S1 = sum_chi L(chi) |R_N(chi)|^2,
// where R_N(chi) = sum_{n <= N} q_n chi(n) and L(chi) = sum_k b_k chi(k) is a
// finite Dirichlet series with nonnegative coefficients. Each sum is computed
// two independent ways:
//   character form:   group DFTs of the residue-aggregated coefficients,
//   congruence form:  phi(q) sum_k b_k sum_{k m = n (mod q)} q_m q_n,
//                     evaluated over residue buckets (no characters involved).

// b_k = k^{-sigma} on Y-smooth k <= K (the Euler product over p <= Y).
std::vector<CoeffEntry> euler_series_coeffs(double sigma, double y_cutoff, std::uint64_t k_limit);

// p^{-sigma} on primes p <= X (the prime sum S_chi(sigma, X)).
std::vector<CoeffEntry> prime_series_coeffs(double sigma, double x_cutoff);

// r[a] = sum_{n = a mod q} w_n, fixed-order compensated accumulation.
std::vector<double> residue_profile(std::span<const CoeffEntry> entries, std::uint64_t q);

double s2_character_sum(const CharacterGroup& group, const ResonatorCoeffs& coeffs);
double s2_congruence_form(std::uint64_t q, const ResonatorCoeffs& coeffs);
cplx s1_character_sum(const CharacterGroup& group, const ResonatorCoeffs& coeffs,
                      std::span<const CoeffEntry> l_series);
double s1_congruence_form(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> l_series);

// Convenience forms. The scheme cutoff must be below q; Y must be >= the
// scheme cutoff (b_k >= a_k).
double s2_character_sum(const CharacterGroup& group, const WeightScheme& scheme, std::uint64_t n_limit);
double s2_congruence_form(std::uint64_t q, const WeightScheme& scheme, std::uint64_t n_limit);
cplx s1_character_sum(const CharacterGroup& group, const WeightScheme& scheme, double sigma, double y_cutoff,
                      std::uint64_t n_limit, std::uint64_t k_limit);
double s1_congruence_form(std::uint64_t q, const WeightScheme& scheme, double sigma, double y_cutoff,
                          std::uint64_t n_limit, std::uint64_t k_limit);

// Exact finite analogue of the k|n restriction argument:
//   |S1| / S2 >= sum_k w_k * S2(N, N/k) / S2(N, N),
// with S2(N, M) = phi(q) sum_{m <= N, r <= M, m = r (mod q)} q_m q_r and
// w_k = a_k q_k (resp. p^{-sigma} q_p). Returns the right-hand side.
double finite_relation_bound(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> lower_terms);

struct PrincipalTerms {
    double r0_squared = 0.0;   // |R_N(chi_0)|^2
    double l_r0_squared = 0.0; // L(chi_0) |R_N(chi_0)|^2
};

struct Certificate {
    bool pass = false;
    double margin = 0.0;          // |S1|/S2 - (1 - tau_cert) * lower_bound
    double tau_cert = 0.0;        // 1 - certified_ratio / lower_bound
    double max_tau = 0.05;
    double certified_ratio = 0.0; // finite_relation_bound
};

struct PrincipalExclusion {
    cplx s1_star;
    double s2_star = 0.0;
    double ratio_star = 0.0;
    double relative_change = 0.0; // (ratio_star - ratio) / ratio
    double log_r0_squared = 0.0;  // log |R_N(chi_0)|^2
    double log_s2_star = 0.0;
    std::optional<double> order1_log_bound; // (1 + (2 - log 4)/B) log q
    std::optional<double> order2_log_bound; // 2 log q / B
};

struct ResonanceReport {
    std::uint64_t q = 0;
    double sigma = 1.0;
    SchemeKind scheme = SchemeKind::linear;
    double x = 0.0; // linear: resonator cutoff; half: prime-sum cutoff
    double y = 0.0; // linear: Euler-series cutoff; half: resonator cutoff
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    cplx s1;
    double s2 = 0.0;
    double ratio = 0.0;
    double lower_bound = 0.0;
    double tail_fraction = 0.0;
    PrincipalTerms principal_terms;
    Certificate certificate;

    std::optional<double> b;               // Theorem-1 parameter B
    std::optional<double> mertens_target;  // e^gamma log X (1 - 1/log X)
    double dual_oracle_rel_diff = 0.0;     // character vs congruence forms
    std::optional<PrincipalExclusion> exclusion;
};

// X = log q log log q / B.
double theorem1_cutoff(std::uint64_t q, double b);

// Certificate for |S1|/S2 >= (1 - tau_cert) prod_{p <= X} (1 - q_p/p)^{-1},
// sigma = 1, linear weights with X from B. Requires B > log 4.
ResonanceReport ratio_certificate(std::uint64_t q, double b, std::uint64_t n_limit, std::uint64_t k_limit,
                                  double y_cutoff, double max_tau = 0.05);

// Same with an explicit linear scheme (small toy moduli).
ResonanceReport ratio_certificate(std::uint64_t q, const WeightScheme& scheme, std::uint64_t n_limit,
                                  std::uint64_t k_limit, double y_cutoff, double max_tau = 0.05);

// Removes the principal character's contribution from S1 and S2 (computed
// afresh through chi_0) and records the adjusted ratio. Throws
// std::runtime_error if S2* <= 0.
ResonanceReport exclude_principal(const ResonanceReport& report, const CharacterGroup& group);

// a(sigma) = (2 sigma - 1) / (2 - sigma).
double default_a_sigma(double sigma);

struct Theorem3Params {
    double y;
    double x;
};

// Y = max((a/2) log q log log q, Y_min), X = min((log q)^{3/(sigma-1/2)}, X_cap).
Theorem3Params theorem3_params(std::uint64_t q, double sigma, double a_sigma, double y_min, double x_cap);

// Certificate for |S1|/S2 >= (1 - tau_cert) sum_{p <= Y} p^{-sigma}/2 with the
// half-weight resonator and S1 = sum_chi S_chi(sigma, X) |R(chi)|^2.
// n_limit = 0 picks the smallest power-of-two N with resonator tail
// fraction <= 1e-3.
ResonanceReport theorem3_quotient(std::uint64_t q, double sigma, double a_sigma, double y_min, double x_cap,
                                  std::uint64_t n_limit = 0, double max_tau = 0.05);

struct BadSetBudget {
    double bound_count = 0.0; // q^{1 - a}
    double r_bound = 0.0;     // 2^{2 pi(Y)}
    double bad_mass = 0.0;    // bound_count * r_bound
    double s2_floor = 0.0;    // phi(q) <= S2
};

BadSetBudget bad_set_budget(std::uint64_t q, double sigma, double a_sigma, double y_cutoff);

} // namespace reslab
