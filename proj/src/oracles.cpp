#include "reslab/oracles.hpp"

namespace reslab::oracle {

double pair_congruence_sum(std::uint64_t q, const ResonatorCoeffs& coeffs) {
    CompensatedSum sum;
    for (const auto& [m, qm] : coeffs.entries) {
        if (m % q == 0)
            continue;
        for (const auto& [n, qn] : coeffs.entries)
            if (m % q == n % q)
                sum += qm * qn;
    }
    return static_cast<double>(q - 1) * sum.value();
}

double triple_congruence_sum(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> l_series) {
    CompensatedSum sum;
    for (const auto& [k, bk] : l_series) {
        if (k % q == 0)
            continue;
        for (const auto& [m, qm] : coeffs.entries) {
            if (m % q == 0)
                continue;
            const std::uint64_t target = (k % q) * (m % q) % q;
            for (const auto& [n, qn] : coeffs.entries)
                if (n % q == target)
                    sum += bk * qm * qn;
        }
    }
    return static_cast<double>(q - 1) * sum.value();
}

std::vector<cplx> naive_group_dft(const CharacterGroup& group, std::span<const cplx> f) {
    const std::uint64_t q = group.modulus();
    if (f.size() != q - 1)
        throw std::invalid_argument("naive_group_dft: expected q - 1 values");
    std::vector<cplx> out(q - 1);
    for (std::uint64_t j = 0; j < q - 1; ++j) {
        ComplexCompensatedSum sum;
        for (std::uint64_t a = 1; a < q; ++a)
            sum += f[a - 1] * group.value(j, a);
        out[j] = sum.value();
    }
    return out;
}

} // namespace reslab::oracle
