#pragma once

#include <complex>

namespace riemann {

// sin(pi x) and cos(pi x) with exact dyadic argument reduction (fmod by 2 is
// exact in IEEE arithmetic). Integer x gives exactly 0 / +-1, and half-integer
// x gives exactly 0 for cos_pi. This is what makes canonical zero-dropping of
// increment coefficients exact rather than tolerance-based.
double sin_pi(double x);
double cos_pi(double x);

/// e^{2 pi i turns}.
std::complex<double> unit_cis(double turns);

}  // namespace riemann
