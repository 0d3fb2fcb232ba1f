#pragma once

#include <complex>
#include <cstdint>
#include <map>

namespace riemann {

/// Finite trigonometric polynomial sum_n c_n e^{2 pi i n x}, stored as a
/// sparse frequency -> coefficient map. The supports of interest here have
/// density ~sqrt(K) (squares only), so a map beats any dense spectrum.
///
/// Canonical form: coefficients that are exactly zero are never stored, and
/// max_freq() is the largest |n| over the stored support (0 when empty).
/// Instances are immutable after construction and safe to share across
/// threads.
class TrigPolynomial {
 public:
  using CoeffMap = std::map<std::int64_t, std::complex<double>>;

  TrigPolynomial() = default;
  explicit TrigPolynomial(CoeffMap coeffs);

  const CoeffMap& coefficients() const noexcept { return coeffs_; }

  /// Coefficient at frequency n; 0 when n is outside the support.
  std::complex<double> coefficient(std::int64_t n) const;

  std::int64_t max_freq() const noexcept { return max_freq_; }
  std::int64_t min_freq() const noexcept { return min_freq_; }
  std::size_t support_size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

 private:
  CoeffMap coeffs_;
  std::int64_t max_freq_ = 0;  // max |n| over support
  std::int64_t min_freq_ = 0;  // smallest frequency in the support (signed)
};

TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b);
TrigPolynomial operator*(const std::complex<double>& c, const TrigPolynomial& p);

}  // namespace riemann
