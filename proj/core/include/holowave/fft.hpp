#pragma once

#include <complex>
#include <vector>

namespace holowave::detail {

// Unnormalized complex DFTs backed by FFTW. Plans are cached per size behind
// a mutex; execution copies through fftw_malloc'd scratch so concurrent
// callers never share buffers.
void dft_forward(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);
void dft_inverse(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);

}  // namespace holowave::detail
