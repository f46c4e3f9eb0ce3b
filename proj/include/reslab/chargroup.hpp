#pragma once

#include <complex>
#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace reslab {

using cplx = std::complex<double>;

class Character;

// The group G_q of Dirichlet characters modulo an odd prime q, indexed by
// exponent j against a fixed primitive root g:
//   chi_j(a) = exp(2 pi i j dlog(a) / (q-1))  for q not dividing a.
// Copies share the (immutable) discrete-log and root-of-unity tables.
class CharacterGroup {
public:
    // Throws std::invalid_argument unless q is an odd prime below 2^31.
    static CharacterGroup build(std::uint64_t q);

    std::uint64_t modulus() const { return data_->q; }
    std::uint64_t generator() const { return data_->g; }
    // phi(q) = q - 1 = number of characters.
    std::uint64_t order() const { return data_->q - 1; }

    // k with g^k = a (mod q); a must be coprime to q.
    std::uint32_t dlog(std::uint64_t a) const;

    // exp(2 pi i k / (q-1)).
    cplx root(std::uint64_t k) const { return data_->roots[k % order()]; }

    cplx value(std::uint64_t j, std::uint64_t n) const {
        const std::uint64_t a = n % data_->q;
        if (a == 0)
            return {0.0, 0.0};
        return data_->roots[(j % order()) * data_->dlog[a] % order()];
    }

    Character character(std::uint64_t j) const;
    Character principal() const;

    // Index of the complex-conjugate character.
    std::uint64_t conjugate_index(std::uint64_t j) const { return (order() - j % order()) % order(); }

    // chi_j(-1) = +1 (even) or -1 (odd).
    bool is_even(std::uint64_t j) const;

private:
    struct Data {
        std::uint64_t q = 0;
        std::uint64_t g = 0;
        std::vector<std::uint32_t> dlog; // dlog[0] unused
        std::vector<cplx> roots;
    };
    explicit CharacterGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

CharacterGroup build_group(std::uint64_t q);

// A single character of a CharacterGroup. Holds a (shared) reference to the
// group's tables, so it stays valid independently of the group object.
class Character {
public:
    Character(CharacterGroup group, std::uint64_t index);

    cplx operator()(std::uint64_t n) const { return group_.value(index_, n); }
    std::uint64_t modulus() const { return group_.modulus(); }
    std::uint64_t index() const { return index_; }
    bool is_principal() const { return index_ == 0; }
    Character conjugate() const { return {group_, group_.conjugate_index(index_)}; }
    const CharacterGroup& group() const { return group_; }

private:
    CharacterGroup group_;
    std::uint64_t index_;
};

// A periodic arithmetic function given by its values on residues 0..m-1.
// Used for fixture characters of small non-prime moduli (e.g. the
// non-trivial character mod 4); multiplicativity is not checked.
class ResidueCharacter {
public:
    ResidueCharacter(std::uint64_t modulus, std::vector<cplx> values);

    cplx operator()(std::uint64_t n) const { return values_[n % modulus_]; }
    std::uint64_t modulus() const { return modulus_; }
    // True when the values sum to (numerically) nonzero over a period.
    bool is_principal() const;
    ResidueCharacter conjugate() const;

private:
    std::uint64_t modulus_;
    std::vector<cplx> values_;
};

template <typename C>
concept CharacterLike = requires(const C& chi, std::uint64_t n) {
    { chi(n) } -> std::convertible_to<cplx>;
    { chi.modulus() } -> std::convertible_to<std::uint64_t>;
    { chi.is_principal() } -> std::convertible_to<bool>;
};

// sum over chi of chi(m) * conj(chi(n)), by direct summation over all q-1
// characters. Throws unless gcd(mn, q) = 1.
double orthogonality_sum(const CharacterGroup& group, std::uint64_t m, std::uint64_t n);

// out[j] = sum_{a=1}^{q-1} f(a) chi_j(a) for every j, where f[a-1] holds f(a).
// Reindexes along powers of g and applies one length-(q-1) DFT.
std::vector<cplx> dft_over_group(const CharacterGroup& group, std::span<const cplx> f);

// Real-input convenience overload.
std::vector<cplx> dft_over_group(const CharacterGroup& group, std::span<const double> f);

} // namespace reslab
