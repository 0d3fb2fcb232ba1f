#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "riemann/trig_polynomial.hpp"

namespace riemann {

enum class SeriesKind { RiemannR, GaussSumD, IncrementI, TrajectoryPhi };

/// Declarative description of one of the built-in series. `truncation` is
/// the frequency cutoff K_max for RiemannR/IncrementI/TrajectoryPhi and the
/// number of terms N for GaussSumD. `shift` is present iff kind==IncrementI.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::RiemannR;
  std::int64_t truncation = 1;
  std::optional<double> shift;

  void validate() const;  // throws std::invalid_argument
};

/// Coefficients of sum_{n^2 <= k_max} e^{2 pi i n^2 x} / n^2: c_k = 1/k for
/// every perfect square k <= k_max, nothing else. Support size is
/// floor(sqrt(k_max)).
TrigPolynomial riemann_coefficients(std::int64_t k_max);

/// Quadratic Gauss sum D_N = sum_{m=1}^{N} e^{2 pi i m^2 x}: unit
/// coefficients at the first N squares, max_freq = N^2.
TrigPolynomial gauss_sum_coefficients(std::int64_t n_terms);

/// Symmetric increment f(x + l/2) - f(x - l/2): multiplies each coefficient
/// by 2 i sin(pi k l). Its L^p norms equal those of the one-sided increment
/// f(x+l) - f(x), which is a translate. Coefficients that vanish exactly
/// (sin at an integer) are dropped; near-zero values are kept.
TrigPolynomial increment_coefficients(const TrigPolynomial& base, double ell);

/// Corner-trajectory function
///   phi(t) = 2 pi i t + 2 sum_{k=1}^{floor(sqrt(k_max))} (e^{2 pi i k^2 t} - 1)/k^2 + pi^2/3,
/// truncated at k^2 <= k_max, evaluated at each grid point. The dropped tail
/// is bounded by 2/sqrt(k_max) in absolute value (see phi_tail_bound).
std::vector<std::complex<double>> phi_samples(std::span<const double> t_grid,
                                              std::int64_t k_max);

/// Builds the coefficient polynomial for RiemannR / GaussSumD / IncrementI.
/// TrajectoryPhi has no coefficient representation (linear drift term) and
/// is rejected; use phi_samples.
TrigPolynomial make_polynomial(const SeriesSpec& spec);

/// Exact L^2 mass dropped by truncating the Riemann series at k_max:
/// zeta(4) - sum_{n <= floor(sqrt(k_max))} n^-4.
double riemann_l2_tail_bound(std::int64_t k_max);

/// Uniform bound on the phi truncation error: 2/floor(sqrt(k_max)).
double phi_tail_bound(std::int64_t k_max);

}  // namespace riemann
