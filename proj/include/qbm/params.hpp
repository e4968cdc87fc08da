#pragma once

#include <cmath>
#include <complex>

#include "qbm/errors.hpp"

namespace qbm {

// Bath / particle parameters in natural units: hbar = m = zeta = 1 unless the
// caller overrides them. `temperature` is the dimensionless ratio kT/(hbar*gamma)
// with gamma = zeta/m; temperature == 0 selects the exact zero-temperature
// branch (coth == 1), never a numerical limit.
struct PhysicalParams {
    double m = 1.0;
    double zeta = 1.0;
    double tau = 0.0;
    double omega0 = 0.0;
    double hbar = 1.0;
    double temperature = 0.0;

    double gamma() const { return zeta / m; }

    void validate() const {
        if (!(m > 0.0)) throw UnphysicalInputError("mass must be positive");
        if (!(zeta > 0.0)) throw UnphysicalInputError("friction constant must be positive");
        if (!(hbar > 0.0)) throw UnphysicalInputError("hbar must be positive");
        if (tau < 0.0) throw UnphysicalInputError("relaxation time must be non-negative");
        if (omega0 < 0.0) throw UnphysicalInputError("oscillator frequency must be non-negative");
        if (temperature < 0.0) throw UnphysicalInputError("temperature must be non-negative");
        if (!std::isfinite(m) || !std::isfinite(zeta) || !std::isfinite(tau) ||
            !std::isfinite(omega0) || !std::isfinite(hbar) || !std::isfinite(temperature))
            throw UnphysicalInputError("parameters must be finite");
    }

    // Memory function of the single-relaxation-time bath, mu(omega) = zeta/(1 - i omega tau).
    std::complex<double> mu_tilde(double omega) const {
        return zeta / std::complex<double>(1.0, -omega * tau);
    }

    // Denominator of the response function,
    // D(omega) = m(omega0^2 - omega^2)(1 - i omega tau) - i omega zeta.
    std::complex<double> response_denominator(double omega) const {
        const std::complex<double> one_minus(1.0, -omega * tau);
        return m * (omega0 * omega0 - omega * omega) * one_minus -
               std::complex<double>(0.0, omega * zeta);
    }

    // alpha(omega) = (1 - i omega tau) / D(omega).
    std::complex<double> response_alpha(double omega) const {
        return std::complex<double>(1.0, -omega * tau) / response_denominator(omega);
    }

    // Im alpha(omega) = zeta * omega / |D(omega)|^2, exact identity; this form
    // never suffers cancellation between the two terms of alpha.
    double im_alpha(double omega) const {
        const std::complex<double> d = response_denominator(omega);
        return zeta * omega / std::norm(d);
    }

    // coth(hbar omega / 2kT) with kT = temperature * hbar * gamma; exactly 1 at T = 0.
    double coth_factor(double omega) const {
        if (temperature == 0.0) return 1.0;
        return 1.0 / std::tanh(omega / (2.0 * temperature * gamma()));
    }
};

// Width matrix of the initial two-particle Gaussian measurement function,
// f ~ exp{-(a11 x1^2 + 2 a12 x1 x2 + a22 x2^2)/4}. Entries have dimension
// 1/length^2; in natural units they equal the dimensionless CLI widths.
struct WidthMatrix {
    double a11 = 5.0;
    double a12 = 4.0;
    double a22 = 5.0;

    bool symmetric() const { return a11 == a22; }

    void validate() const {
        if (!(a11 > 0.0) || !(a22 > 0.0))
            throw UnphysicalInputError("diagonal widths must be positive");
        // The width matrix must be positive definite for a normalizable state.
        if (!(a11 * a22 - a12 * a12 > 0.0))
            throw UnphysicalInputError("width matrix must be positive definite");
        if (!std::isfinite(a11) || !std::isfinite(a12) || !std::isfinite(a22))
            throw UnphysicalInputError("width matrix entries must be finite");
    }
};

}  // namespace qbm
