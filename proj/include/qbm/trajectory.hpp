#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qbm/covariance.hpp"
#include "qbm/duan.hpp"
#include "qbm/kernels.hpp"

namespace qbm {

struct TrajectoryPoint {
    double t = 0.0;
    Eigen::Matrix4d M;
    ReducedForm rf;
    DuanVerdict verdict;
};

// Weight matrix of the evolved pair state at time t: closed form for the
// free pair, polarization extraction of the oscillator exponent otherwise.
Eigen::Matrix4d pair_state(const KernelSet& ks, const WidthMatrix& a, double t, double L);

// Evolved pair state sampled on a uniform grid over [0, t_max]; L is the
// length used to form the dimensionless weight matrix.
std::vector<TrajectoryPoint> evolve_trajectory(const KernelSet& ks, const WidthMatrix& a,
                                               double t_max, int n_points, double L);

// Separability margin (Duan lhs - 1/2) as a function of time; negative while
// the pair is entangled. Suitable for crossing location.
std::function<double(double)> margin_function(const KernelSet& ks, const WidthMatrix& a, double L);

}  // namespace qbm
