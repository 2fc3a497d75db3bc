#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wavecoh::fft {

std::size_t next_pow2(std::size_t n);
bool is_pow2(std::size_t n);

// In-place radix-2 transform. Size must be a power of two (or 0/1).
// The inverse applies the 1/n factor.
void transform(std::vector<std::complex<double>>& a, bool inverse);

inline void forward(std::vector<std::complex<double>>& a) { transform(a, false); }
inline void inverse(std::vector<std::complex<double>>& a) { transform(a, true); }

}  // namespace wavecoh::fft
