#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "riemann/trig_polynomial.hpp"

namespace riemann {

/// Complex samples at the uniform grid x_j = j/M, M a power of two >= 2.
class GridSignal {
 public:
  explicit GridSignal(std::vector<std::complex<double>> samples);

  std::size_t grid_size() const noexcept { return samples_.size(); }
  std::span<const std::complex<double>> samples() const noexcept { return samples_; }

 private:
  std::vector<std::complex<double>> samples_;
};

/// Range of |frequency| selected by a filter. `hi` empty means unbounded
/// above. Bands act on the modulus |n|, so filters are symmetric in +-n.
struct BandSpec {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;
  bool lo_inclusive = true;
  bool hi_inclusive = true;

  static BandSpec at_least(std::int64_t n);              // |n| >= n
  static BandSpec above(std::int64_t n);                 // |n| >  n
  static BandSpec at_most(std::int64_t n);               // |n| <= n
  static BandSpec below(std::int64_t n);                 // |n| <  n
  static BandSpec half_open(std::int64_t lo, std::int64_t hi);  // lo <= |n| < hi

  bool contains(std::int64_t abs_freq) const;
  void validate() const;  // lo <= hi and nonempty over the integers
};

/// Littlewood-Paley partition of [1, max_freq]: block 0 is [1, A), block j
/// is [A^j, A^{j+1}). Consecutive half-open integer ranges, so blocks are
/// disjoint and cover [1, max_freq] by construction. (For A < 2 a power
/// step may contain no integer; such degenerate ranges are skipped.)
struct BlockPlan {
  double base = 2.0;
  std::vector<BandSpec> blocks;
};

BlockPlan make_block_plan(double base, std::int64_t max_freq);

/// Evaluates the polynomial on the uniform M-grid by scattering coefficients
/// into a length-M spectrum and running one inverse FFT. Requires
/// M > 2*max_freq (no aliasing).
GridSignal synthesize(const TrigPolynomial& poly, std::size_t grid_size);

/// Keeps exactly the coefficients whose |frequency| lies in the band.
/// Operates on coefficients, never on samples, so it is leakage-free;
/// at_least(0) is the identity.
TrigPolynomial band_filter(const TrigPolynomial& poly, const BandSpec& band);

/// Splits the polynomial along make_block_plan(base, max_freq). Summing the
/// returned blocks reproduces the input exactly, coefficient by coefficient.
/// The support must consist of strictly positive frequencies.
std::vector<TrigPolynomial> littlewood_paley_blocks(const TrigPolynomial& poly,
                                                    double base);

/// samples'[j] = samples[(j + offset) mod M]; exact rotation, no interpolation.
GridSignal circular_shift(const GridSignal& signal, std::int64_t offset);

}  // namespace riemann
