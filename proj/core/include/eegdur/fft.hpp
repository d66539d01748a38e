#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace eegdur {

// Forward DFT of a real sequence, returning the full complex spectrum
// (size n). Radix-2 iterative FFT when n is a power of two, direct DFT
// otherwise; sequence lengths here are at most one PSD segment (~fs
// samples), so the O(n^2) fallback stays cheap.
std::vector<std::complex<double>> real_dft(const std::vector<double>& x);

}  // namespace eegdur
