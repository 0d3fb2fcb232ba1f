#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riemann/spectral.hpp"
#include "riemann/trig_polynomial.hpp"

namespace riemann {

// Exposed Lebesgue exponent range. Even p in this range have exact grid
// quadrature; p = 6, 8 are the interesting checks against pure power laws.
inline constexpr double kMinExponent = 1.0;
inline constexpr double kMaxExponent = 12.0;

// Work budget for the sparse self-convolution (unordered pairs). 2^24 pairs
// keeps the transient buffer around 400 MB; beyond that the grid path wins.
inline constexpr std::size_t kDefaultConvolutionPairBudget = std::size_t{1} << 24;

/// ||f||_2^2 = sum |c_n|^2, exact up to compensated-summation error.
double l2_squared_exact(const TrigPolynomial& poly);

/// ||f||_4^4 = ||f^2||_2^2 = sum_k |sum_n c_n c_{k-n}|^2 via sparse
/// self-convolution of the coefficient map. Throws BudgetExceededError when
/// the pair count exceeds the budget (the caller should use grid quadrature).
double l4_fourth_exact(const TrigPolynomial& poly,
                       std::size_t max_pairs = kDefaultConvolutionPairBudget);

/// ((1/M) sum_j |s_j|^p)^{1/p}. Exact for even integer p when the signal is
/// a synthesized polynomial with M >= p*max_freq + 1; otherwise a quadrature
/// approximation (callers refine the grid and compare).
double lp_norm_grid(const GridSignal& signal, double p);

enum class NormMethod { ExactParseval, ExactConvolution, GridQuadrature };

/// Method selector for norm_power. ExactParseval requires p == 2 and
/// ExactConvolution requires p == 4; grid_size is used (and auto-enlarged to
/// the exactness requirement) only by GridQuadrature.
struct NormRequest {
  double p = 2.0;
  NormMethod method = NormMethod::ExactParseval;
  std::size_t grid_size = 0;  // 0 = choose automatically

  void validate() const;
};

/// ||f||_p^p by the requested method.
double norm_power(const TrigPolynomial& poly, const NormRequest& request);

/// Scale snapped to the nearest grid fraction m/M.
struct ScaleSnap {
  std::int64_t numerator = 0;
  double value = 0.0;
};
ScaleSnap snap_scale(double ell, std::size_t grid_size);

/// Structure function S_p(l) = ||f(.+l) - f(.)||_p^p, computed through the
/// symmetric increment polynomial. l is snapped to the nearest grid fraction
/// m/M first; a snap to 0 or M gives exactly 0 (the increment vanishes).
/// p = 2 uses the exact Parseval path 4 sum |c_k|^2 sin^2(pi k l); p = 4 the
/// exact convolution (grid quadrature as fallback); other p grid quadrature.
double structure_function(const TrigPolynomial& poly, double p, double ell,
                          std::size_t grid_size);

struct StructureFunctionTable {
  struct Row {
    double p = 0.0;
    double ell = 0.0;  // snapped value
    double value = 0.0;
  };
  struct Meta {
    std::int64_t max_freq = 0;
    std::size_t grid_size = 0;
    // (requested, snapped) in the requested order
    std::vector<std::pair<double, double>> snaps;
  };

  std::vector<Row> rows;  // sorted by (p, ell)
  Meta meta;
};

/// S_p(l) over the Cartesian product ps x ells, rows sorted by (p, ell),
/// snapped scales recorded. Cells are independent and evaluated in parallel.
StructureFunctionTable structure_table(const TrigPolynomial& poly,
                                       std::span<const double> ps,
                                       std::span<const double> ells,
                                       std::size_t grid_size, int threads = 0);

}  // namespace riemann
