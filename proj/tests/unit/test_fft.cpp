#include "reslab/fft.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace reslab;
using c64 = std::complex<double>;

namespace {

std::vector<c64> direct_dft(const std::vector<c64>& in) {
    const std::size_t n = in.size();
    std::vector<c64> out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            out[j] += in[k] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n);
    return out;
}

std::vector<c64> signal(std::size_t n) {
    std::vector<c64> v(n);
    for (std::size_t k = 0; k < n; ++k)
        v[k] = {std::sin(1.3 * k + 0.2), std::cos(0.7 * k * k)};
    return v;
}

double max_err(const std::vector<c64>& a, const std::vector<c64>& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

} // namespace

TEST_CASE("any-length DFT matches the direct sum") {
    for (std::size_t n : {1, 2, 3, 5, 6, 7, 12, 16, 31, 64, 100, 1008}) {
        const auto in = signal(n);
        const auto fast = dft_any_length(in);
        CHECK(max_err(fast, direct_dft(in)) < 1e-9 * static_cast<double>(n));
    }
}

TEST_CASE("power-of-two FFT inverts") {
    auto data = signal(256);
    const auto original = data;
    fft_pow2(data, +1);
    fft_pow2(data, -1);
    for (auto& v : data)
        v /= 256.0;
    CHECK(max_err(data, original) < 1e-12);
}

TEST_CASE("DFT of a delta is constant") {
    std::vector<c64> in(10006);
    in[0] = 1.0;
    const auto out = dft_any_length(in);
    CHECK(max_err(out, std::vector<c64>(10006, 1.0)) < 1e-10);
}
