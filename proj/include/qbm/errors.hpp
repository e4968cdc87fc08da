#pragma once

#include <stdexcept>
#include <string>

namespace qbm {

// Error taxonomy. Every failure mode maps to exactly one of these so callers
// (and the CLI exit-code mapping) can dispatch on type rather than message.

// Argument outside a function's mathematical domain (t < 0, omega0 <= 0 where
// an oscillator is required, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An algorithm failed to converge or lost too much precision to certify its
// result (root polish residual, quadrature non-convergence, degenerate poles).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested quantity is mathematically infinite for the given bath.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exponent offered for covariance extraction failed the quadratic-form
// probe (extraction by polarization would silently return garbage).
struct NonQuadraticError : std::runtime_error {
    explicit NonQuadraticError(const std::string& msg) : std::runtime_error(msg) {}
};

// A matrix does not have the two-particle block structure the reduction
// assumes (asymmetric blocks, non-symmetric matrix).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Values that cannot arise from a physical state (non-positive determinants,
// uncertainty-violating widths).
struct UnphysicalInputError : std::runtime_error {
    explicit UnphysicalInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad run configuration (CLI flags / config file), distinct from math errors.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A root search was asked for a crossing that does not exist in the window.
struct NoCrossingError : std::runtime_error {
    explicit NoCrossingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qbm
