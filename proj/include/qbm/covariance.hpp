#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qbm/kernels.hpp"

namespace qbm {

// Argument of the pair's Wigner characteristic function: (P_n, Q_n) are the
// Fourier-dual variables conjugate to (x_n, m xdot_n).
struct ChiPoint {
    double P1 = 0.0;
    double Q1 = 0.0;
    double P2 = 0.0;
    double Q2 = 0.0;
};

// log of the characteristic function at time t; a negative quadratic form
// vanishing at the origin.
using ExponentFn = std::function<double(const ChiPoint&)>;

// Exact evolved exponent for the correlated pair with width matrix a
// (entries of dimension 1/length^2). Free particle for omega0 == 0,
// otherwise the oscillator form built on the equilibrium correlation
// function. Both require the bath's velocity variance to be finite.
ExponentFn exponent_eval(const KernelSet& ks, const WidthMatrix& a, double t);

// Weight matrix M of exp(-1/2 X.M.X) recovered from an exponent by
// polarization over the dimensionless basis X = (L P1/hbar, Q1/L, L P2/hbar,
// Q2/L). Throws NonQuadraticError if the exponent is not a quadratic form
// vanishing at the origin.
Eigen::Matrix4d extract_covariance(const ExponentFn& e, double L, double hbar);

// Closed-form M for the symmetric free-particle state.
Eigen::Matrix4d assemble_free(const KernelSet& ks, const WidthMatrix& a, double t, double L);

// Closed-form M at t = 0 (free particle; widths may be asymmetric).
Eigen::Matrix4d initial_covariance(const KernelSet& ks, const WidthMatrix& a, double L);

}  // namespace qbm
