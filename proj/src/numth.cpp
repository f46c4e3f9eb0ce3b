#include "reslab/numth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace reslab {

std::size_t PrimeTable::count_up_to(double x) const {
    if (x < 2.0)
        return 0;
    auto end = std::upper_bound(primes.begin(), primes.end(), x,
                                [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
    return static_cast<std::size_t>(end - primes.begin());
}

PrimeTable sieve_primes(std::uint64_t limit) {
    PrimeTable table;
    table.limit = limit;
    if (limit < 2)
        return table;

    // odds-only Eratosthenes: index i stands for 2i+1
    const std::uint64_t half = limit / 2 + 1;
    std::vector<bool> composite(half, false);
    composite[0] = true;
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = p * p / 2; j < half; j += p)
            composite[j] = true;
    }
    table.primes.push_back(2);
    for (std::uint64_t i = 1; i < half; ++i)
        if (!composite[i] && 2 * i + 1 <= limit)
            table.primes.push_back(2 * i + 1);
    return table;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    if (n % 3 == 0)
        return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1)
        f.factors.push_back({m, 1});
    return f;
}

std::uint64_t euler_phi(std::uint64_t q) {
    if (q == 0)
        throw std::invalid_argument("euler_phi: q must be positive");
    std::uint64_t phi = q;
    for (const auto& [p, e] : factorize(q).factors)
        phi = phi / p * (p - 1);
    return phi;
}

double mangoldt(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("mangoldt: n must be positive");
    if (n == 1)
        return 0.0;
    const auto f = factorize(n);
    if (f.factors.size() != 1)
        return 0.0;
    return std::log(static_cast<double>(f.factors.front().prime));
}

std::vector<std::uint64_t> smooth_numbers(std::uint64_t bound, std::uint64_t limit) {
    if (limit == 0)
        return {};
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t p : sieve_primes(bound).primes) {
        if (p > limit)
            break;
        const std::size_t existing = out.size();
        for (std::size_t i = 0; i < existing; ++i) {
            std::uint64_t n = out[i];
            while (n <= limit / p) {
                n *= p;
                out.push_back(n);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(a % m, b % m, &product))
        throw std::overflow_error("mul_mod: 64-bit overflow (modulus too large)");
    return product % m;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
    if (a % q == 0)
        throw std::invalid_argument("multiplicative_order: a must be coprime to q");
    std::uint64_t order = q - 1;
    for (const auto& [r, e] : factorize(q - 1).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (pow_mod(a, order / r, q) == 1)
                order /= r;
            else
                break;
        }
    }
    return order;
}

std::uint64_t primitive_root(std::uint64_t q) {
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("primitive_root: modulus " + std::to_string(q) +
                                    " is not an odd prime");
    if (q >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("primitive_root: modulus must be below 2^32");
    const auto divisors = factorize(q - 1).factors;
    for (std::uint64_t g = 2; g < q; ++g) {
        bool generates = true;
        for (const auto& [r, e] : divisors) {
            if (pow_mod(g, (q - 1) / r, q) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return g;
    }
    throw std::logic_error("primitive_root: no generator found");
}

} // namespace reslab
