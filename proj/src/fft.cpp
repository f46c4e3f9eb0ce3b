#include "reslab/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reslab {

namespace {

using cplx = std::complex<double>;

// exp(2 pi i num / den) with num reduced first so the argument stays small.
cplx unit_root(std::uint64_t num, std::uint64_t den) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

void fft_pow2(std::vector<cplx>& data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n))
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("fft_pow2: sign must be +1 or -1");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1U;
        for (; j & bit; bit >>= 1U)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }

    // twiddles evaluated directly (no recurrence) to keep rounding flat in n
    std::vector<cplx> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const cplx w = unit_root(k, n);
        twiddle[k] = sign > 0 ? w : std::conj(w);
    }

    for (std::size_t len = 2; len <= n; len <<= 1U) {
        const std::size_t stride = n / len;
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cplx u = data[start + k];
                const cplx v = data[start + k + half] * twiddle[k * stride];
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

std::vector<cplx> dft_any_length(std::span<const cplx> in) {
    const std::size_t n = in.size();
    if (n == 0)
        return {};
    if (std::has_single_bit(n)) {
        std::vector<cplx> out(in.begin(), in.end());
        fft_pow2(out, +1);
        return out;
    }

    // jk = (j^2 + k^2 - (j-k)^2) / 2, chirp c_k = exp(+i pi k^2 / n)
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t kk = static_cast<std::uint64_t>(k) * k % two_n;
        chirp[k] = unit_root(kk, two_n);
    }

    const std::size_t m = std::bit_ceil(2 * n - 1);
    std::vector<cplx> a(m, cplx{0.0, 0.0});
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k)
        a[k] = in[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        b[m - k] = std::conj(chirp[k]);
    }

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i)
        a[i] *= b[i];
    fft_pow2(a, +1);

    const double scale = 1.0 / static_cast<double>(m);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = chirp[j] * a[j] * scale;
    return out;
}

} // namespace reslab
