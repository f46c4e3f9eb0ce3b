#pragma once

#include <complex>
#include <span>
#include <vector>

namespace reslab {

// In-place radix-2 FFT, X[j] = sum_k x[k] exp(sign * 2 pi i j k / n).
// Size must be a power of two. sign is +1 or -1; no normalization.
void fft_pow2(std::vector<std::complex<double>>& data, int sign);

// Any-length DFT with the positive exponent convention
//   out[j] = sum_k in[k] exp(+2 pi i j k / n),
// via Bluestein's chirp-z reduction to power-of-two convolutions.
// Deterministic and single-threaded.
std::vector<std::complex<double>> dft_any_length(std::span<const std::complex<double>> in);

} // namespace reslab
