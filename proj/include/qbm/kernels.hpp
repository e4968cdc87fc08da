#pragma once

#include <optional>

#include "qbm/params.hpp"
#include "qbm/pole_decomposition.hpp"

namespace qbm {

enum class KernelMethod { analytic_poles, quadrature };

struct GreenPair {
    double G = 0.0;
    double Gdot = 0.0;
};

struct OscCorrelation {
    double c = 0.0;     // (1/2)<x(t)x(0) + x(0)x(t)>
    double cdot = 0.0;  // d/dt of the above
    double x2 = 0.0;    // equilibrium <x^2>
};

struct KernelPoint {
    double G = 0.0;
    double Gdot = 0.0;
    double s = 0.0;
    double sdot = 0.0;
};

// Evaluates the commutator Green function G, the mean-square displacement
// s(t) = <(x(t)-x(0))^2>, the equilibrium velocity variance <xdot^2> and the
// position correlation function for one particle in the bath. The pole
// decomposition is computed once and cached; if it degenerates (e.g. critical
// damping) the quadrature method is used silently and method() reports it.
class KernelSet {
  public:
    static KernelSet make(const PhysicalParams& p,
                          KernelMethod method = KernelMethod::analytic_poles);

    const PhysicalParams& params() const { return p_; }
    KernelMethod method() const { return method_; }
    bool pole_fallback() const { return fallback_; }
    const PoleSet* pole_set() const { return poles_ ? &*poles_ : nullptr; }

    GreenPair green_function(double t) const;
    double msd(double t) const;
    double msd_dot(double t) const;
    double velocity_variance() const;  // DivergenceError for tau == 0
    OscCorrelation oscillator_correlation(double t) const;  // omega0 > 0 only
    KernelPoint eval(double t) const;

  private:
    KernelSet(const PhysicalParams& p, KernelMethod m, bool fb, std::optional<PoleSet> ps)
        : p_(p), method_(m), fallback_(fb), poles_(std::move(ps)) {}

    bool analytic_moments() const {
        // Coth-weighted moments have closed forms only at T = 0.
        return method_ == KernelMethod::analytic_poles && p_.temperature == 0.0;
    }

    PhysicalParams p_;
    KernelMethod method_;
    bool fallback_;
    std::optional<PoleSet> poles_;
};

}  // namespace qbm
