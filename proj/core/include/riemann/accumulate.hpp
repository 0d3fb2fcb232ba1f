#pragma once

#include <cmath>
#include <complex>

namespace riemann {

/// Kahan-Babuska (Neumaier) compensated accumulator. Unlike plain Kahan
/// summation it stays accurate when the running sum is smaller than the
/// incoming term, which happens in the alternating-magnitude tail sums here.
class NeumaierSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Component-wise compensated accumulator for complex terms.
class ComplexNeumaierSum {
 public:
  void add(const std::complex<double>& value) {
    re_.add(value.real());
    im_.add(value.imag());
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace riemann
