#pragma once

#include <complex>

namespace qbm {

// e^w E1(w) for complex w off the branch cut (-inf, 0], principal branch.
// The product form stays O(1/|w|) in the right half plane and O(1) elsewhere,
// so callers never handle overflow of the separate factors.
std::complex<double> exp_e1(std::complex<double> w);

// e^{-x} Ei(x) for real x > 0 (principal value across the integrand pole).
double exp_ei(double x);

}  // namespace qbm
