#pragma once

#include <functional>

namespace qbm {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_depth = 60;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opt = {});

// Integral of a smoothly decaying f over [a, inf), mapped onto a finite
// interval with w = a + tan(theta). Requires f to decay at least like w^-2.
double integrate_tail_monotone(const std::function<double(double)>& f, double a,
                               const QuadratureOptions& opt = {});

// Integral over [a, inf) of an oscillatory integrand whose consecutive
// panels of width `panel` alternate in sign (half-periods of sin/cos).
// Partial panel sums are extrapolated with Wynn's epsilon algorithm.
// `scale` sets the magnitude against which convergence is judged.
double integrate_tail_alternating(const std::function<double(double)>& f, double a,
                                  double panel, double scale,
                                  const QuadratureOptions& opt = {});

}  // namespace qbm
