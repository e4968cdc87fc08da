#pragma once

#include <complex>
#include <vector>

#include "qbm/params.hpp"

namespace qbm {

// One decaying mode of the response function. In the rotated variable
// lambda = i*omega the response denominator has real coefficients, every
// causal pole sits at Re(lambda) > 0, and overdamped poles are exactly real.
struct PoleTerm {
    std::complex<double> lambda;  // decay rate, Re > 0
    std::complex<double> weight;  // partial-fraction weight of G(t)
};

struct PoleSet {
    std::vector<PoleTerm> terms;
    // t -> infinity limit of G: 1/zeta for the free particle (the deflated
    // lambda = 0 pole), 0 for an oscillator.
    double static_term = 0.0;

    // Poles in the omega plane (lower half plane), omega_k = -i lambda_k.
    std::vector<std::complex<double>> poles_omega() const {
        std::vector<std::complex<double>> out;
        out.reserve(terms.size());
        for (const auto& t : terms) out.push_back(std::complex<double>(0.0, -1.0) * t.lambda);
        return out;
    }
};

// Partial-fraction decomposition of the response function. Throws
// NumericalError for near-degenerate roots (e.g. critical damping), for
// root-polish residuals above tolerance, or for acausal roots.
PoleSet decompose_response(const PhysicalParams& p);

}  // namespace qbm
