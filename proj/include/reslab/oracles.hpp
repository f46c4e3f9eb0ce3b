#pragma once

// Slow, independent reference computations used for cross-checks.

#include "reslab/chargroup.hpp"
#include "reslab/resonator.hpp"
#include "reslab/special.hpp"
#include "reslab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace reslab::oracle {

struct SeriesEstimate {
    cplx value;
    double error = 0.0;
};

// L(1, chi) = sum_{n <= N} chi(n)/n - S(N)/N + int_N^inf S(t)/t^2 dt with
// S(t) = sum_{n <= t} chi(n). The integral is replaced by Sbar/N, Sbar the
// mean of S over one period; the error is at most 2 q max|S - Sbar| / N^2.
template <CharacterLike C>
SeriesEstimate abel_l_one(const C& chi, std::uint64_t n_limit) {
    const std::uint64_t q = chi.modulus();
    if (chi.is_principal())
        throw std::domain_error("abel_l_one: principal character");
    if (n_limit < q)
        throw std::invalid_argument("abel_l_one: N must cover at least one period");

    std::vector<cplx> partial(q);
    cplx running{0.0, 0.0};
    for (std::uint64_t a = 0; a < q; ++a) {
        running += chi(a);
        partial[a] = running;
    }
    ComplexCompensatedSum mean_sum;
    for (const auto& s : partial)
        mean_sum += s;
    const cplx mean = mean_sum.value() / static_cast<double>(q);
    double spread = 0.0;
    for (const auto& s : partial)
        spread = std::max(spread, std::abs(s - mean));

    ComplexCompensatedSum head;
    for (std::uint64_t n = 1; n <= n_limit; ++n)
        head += chi(n) / static_cast<double>(n);
    const double nd = static_cast<double>(n_limit);
    return {head.value() + (mean - partial[n_limit % q]) / nd, 2.0 * static_cast<double>(q) * spread / (nd * nd)};
}

// phi(q) sum over pairs m, n <= N with m = n (mod q) of q_m q_n, by direct
// pair enumeration.
double pair_congruence_sum(std::uint64_t q, const ResonatorCoeffs& coeffs);

// phi(q) sum_k b_k sum over pairs with k m = n (mod q) of q_m q_n, by direct
// triple enumeration.
double triple_congruence_sum(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> l_series);

// out[j] = sum_a f(a) chi_j(a) evaluated term by term.
std::vector<cplx> naive_group_dft(const CharacterGroup& group, std::span<const cplx> f);

} // namespace reslab::oracle
