#pragma once

#include <stdexcept>
#include <string>

namespace riemann {

/// Grid too small to hold the polynomial's spectrum without wrap-around.
class AliasingError : public std::invalid_argument {
 public:
  explicit AliasingError(const std::string& what) : std::invalid_argument(what) {}
};

/// Flatness whose denominator vanishes: empty filter band or identically
/// zero increment. Raised instead of returning infinity so callers can
/// tell a degenerate request from a genuine divergence.
class UndefinedFlatnessError : public std::domain_error {
 public:
  explicit UndefinedFlatnessError(const std::string& what) : std::domain_error(what) {}
};

/// An exact path would exceed its work/memory budget; the message names
/// the grid-quadrature alternative.
class BudgetExceededError : public std::length_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::length_error(what) {}
};

/// Grid-refinement convergence check failed (non-even p quadrature).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riemann
