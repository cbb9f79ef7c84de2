#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cebit::fft {

/// Centered forward 2-D DFT of an n x n row-major array:
///   out[q] = sum_p in[p] exp(-2 pi i (q - n/2).(p - n/2) / n)
/// with both indices measured from pixel n/2. n must be a multiple of 4.
/// Safe to call concurrently; planning is serialized internally.
std::vector<std::complex<double>> centered_dft2(std::span<const std::complex<double>> in, int n);

}  // namespace cebit::fft
