#pragma once

#include <cstdint>
#include <vector>

namespace reslab {

// Primes up to `limit`, ascending. Immutable once built.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // pi(x) for x <= limit.
    std::size_t count_up_to(double x) const;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors; // primes strictly increasing
};

PrimeTable sieve_primes(std::uint64_t limit);

// Deterministic trial division; intended for n < 2^62.
bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t q);

// von Mangoldt function: log p on prime powers p^k (k >= 1), 0 otherwise.
double mangoldt(std::uint64_t n);

// All n <= limit whose prime factors are <= bound, ascending (1 included).
// Built by recursive prime-power multiplication, so the cost is proportional
// to the output size rather than to `limit`.
std::vector<std::uint64_t> smooth_numbers(std::uint64_t bound, std::uint64_t limit);

Factorization factorize(std::uint64_t n);

// Smallest generator of (Z/qZ)^* for an odd prime q; throws otherwise.
std::uint64_t primitive_root(std::uint64_t q);

// Modular arithmetic for moduli below 2^32. Products are overflow-checked.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Multiplicative order of a modulo a prime q (a coprime to q).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

} // namespace reslab
