#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace riemann::fft {

bool is_power_of_two(std::size_t n);

/// Smallest power of two >= n.
std::size_t next_power_of_two(std::size_t n);

/// In-place radix-2 transform, unnormalized:
///   forward:  a[k] <- sum_j a[j] e^{-2 pi i jk/N}
///   inverse:  a[j] <- sum_k a[k] e^{+2 pi i jk/N}
/// N must be a power of two. forward(inverse(a)) == N * a.
void transform(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace riemann::fft
