#include "reslab/chargroup.hpp"

#include "reslab/fft.hpp"
#include "reslab/numth.hpp"
#include "reslab/summation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace reslab {

CharacterGroup CharacterGroup::build(std::uint64_t q) {
    if (q >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("build_group: modulus must be below 2^31");
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("build_group: modulus " + std::to_string(q) + " is not an odd prime");

    auto data = std::make_shared<Data>();
    data->q = q;
    data->g = primitive_root(q);

    const std::uint64_t phi = q - 1;
    data->dlog.assign(q, 0);
    std::vector<bool> seen(q, false);
    std::uint64_t power = 1;
    for (std::uint64_t k = 0; k < phi; ++k) {
        if (seen[power])
            throw std::logic_error("build_group: discrete-log table is not a bijection");
        seen[power] = true;
        data->dlog[power] = static_cast<std::uint32_t>(k);
        power = mul_mod(power, data->g, q);
    }
    if (power != 1)
        throw std::logic_error("build_group: generator order mismatch");

    data->roots.resize(phi);
    for (std::uint64_t k = 0; k < phi; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(phi);
        data->roots[k] = {std::cos(angle), std::sin(angle)};
    }
    return CharacterGroup(std::move(data));
}

CharacterGroup build_group(std::uint64_t q) { return CharacterGroup::build(q); }

std::uint32_t CharacterGroup::dlog(std::uint64_t a) const {
    const std::uint64_t r = a % data_->q;
    if (r == 0)
        throw std::invalid_argument("dlog: argument divisible by the modulus");
    return data_->dlog[r];
}

Character CharacterGroup::character(std::uint64_t j) const {
    if (j >= order())
        throw std::out_of_range("character index out of range");
    return Character(*this, j);
}

Character CharacterGroup::principal() const { return Character(*this, 0); }

bool CharacterGroup::is_even(std::uint64_t j) const {
    // dlog(q-1) = (q-1)/2, so chi_j(-1) = (-1)^j
    return j % 2 == 0;
}

Character::Character(CharacterGroup group, std::uint64_t index) : group_(std::move(group)), index_(index) {
    if (index_ >= group_.order())
        throw std::out_of_range("character index out of range");
}

ResidueCharacter::ResidueCharacter(std::uint64_t modulus, std::vector<cplx> values)
    : modulus_(modulus), values_(std::move(values)) {
    if (modulus_ < 2 || values_.size() != modulus_)
        throw std::invalid_argument("ResidueCharacter: need exactly one value per residue");
}

bool ResidueCharacter::is_principal() const {
    ComplexCompensatedSum total;
    for (const auto& v : values_)
        total += v;
    return std::abs(total.value()) > 1e-9;
}

ResidueCharacter ResidueCharacter::conjugate() const {
    std::vector<cplx> conj_values(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        conj_values[i] = std::conj(values_[i]);
    return {modulus_, std::move(conj_values)};
}

double orthogonality_sum(const CharacterGroup& group, std::uint64_t m, std::uint64_t n) {
    const std::uint64_t q = group.modulus();
    if (m % q == 0 || n % q == 0)
        throw std::invalid_argument("orthogonality_sum: arguments must be coprime to q");
    ComplexCompensatedSum total;
    for (std::uint64_t j = 0; j < group.order(); ++j)
        total += group.value(j, m) * std::conj(group.value(j, n));
    return total.value().real();
}

std::vector<cplx> dft_over_group(const CharacterGroup& group, std::span<const cplx> f) {
    const std::uint64_t q = group.modulus();
    if (f.size() != q - 1)
        throw std::invalid_argument("dft_over_group: expected " + std::to_string(q - 1) + " values, got " +
                                    std::to_string(f.size()));
    // F[k] = f(g^k)
    std::vector<cplx> along_powers(q - 1);
    for (std::uint64_t a = 1; a < q; ++a)
        along_powers[group.dlog(a)] = f[a - 1];
    return dft_any_length(along_powers);
}

std::vector<cplx> dft_over_group(const CharacterGroup& group, std::span<const double> f) {
    std::vector<cplx> as_complex(f.begin(), f.end());
    return dft_over_group(group, std::span<const cplx>(as_complex));
}

} // namespace reslab
