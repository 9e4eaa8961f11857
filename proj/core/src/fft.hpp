#pragma once

#include <complex>
#include <cstddef>

namespace besov::detail {

// Unnormalized in-place DFT, sign -1 forward (e^{-2 pi i nk/N}) and +1 backward.
void fft(std::complex<double>* data, std::size_t n, int sign);

// Row-major ny x nx array, x fastest.
void fft2(std::complex<double>* data, std::size_t nx, std::size_t ny, int sign);

} // namespace besov::detail
