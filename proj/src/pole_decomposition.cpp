#include "qbm/pole_decomposition.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

using cd = std::complex<double>;

// D_lambda(lambda) = D(omega = -i lambda)
//                  = -m tau lambda^3 + m lambda^2 - (m tau omega0^2 + zeta) lambda + m omega0^2.
// Real coefficients, ascending order; degree 3 for tau > 0, else 2, and the
// free particle deflates the exact lambda = 0 root (constant term 0).
std::vector<double> denominator_coeffs(const PhysicalParams& p) {
    return {p.m * p.omega0 * p.omega0, -(p.m * p.tau * p.omega0 * p.omega0 + p.zeta), p.m,
            -p.m * p.tau};
}

cd poly_eval(const std::vector<double>& c, cd x) {
    cd v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

cd poly_deriv_eval(const std::vector<double>& c, cd x) {
    cd v = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) v = v * x + static_cast<double>(i) * c[i];
    return v;
}

std::vector<cd> companion_roots(const std::vector<double>& monic_low_coeffs) {
    // monic_low_coeffs holds c0..c_{n-1} of x^n + c_{n-1}x^{n-1} + ... + c0.
    const int n = static_cast<int>(monic_low_coeffs.size());
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic_low_coeffs[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("pole decomposition: eigenvalue solver failed");
    std::vector<cd> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
    return roots;
}

}  // namespace

PoleSet decompose_response(const PhysicalParams& p) {
    p.validate();
    std::vector<double> full = denominator_coeffs(p);

    // Trim to the true degree and deflate the free particle's exact
    // lambda = 0 root before any numerical root finding.
    while (full.size() > 1 && full.back() == 0.0) full.pop_back();
    std::vector<double> work = full;
    bool deflated_zero = false;
    if (work.front() == 0.0) {
        work.erase(work.begin());
        deflated_zero = true;
    }
    const int degree = static_cast<int>(work.size()) - 1;
    if (degree < 1) throw NumericalError("pole decomposition: degenerate denominator");

    std::vector<double> monic(degree);
    for (int i = 0; i < degree; ++i) monic[i] = work[i] / work[degree];
    std::vector<cd> roots = degree == 1 ? std::vector<cd>{cd(-monic[0], 0.0)}
                                        : companion_roots(monic);

    // Polish on the full (untrimmed-degree) polynomial and certify residuals.
    for (cd& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const cd d = poly_deriv_eval(full, r);
            if (d == cd(0.0, 0.0)) break;
            r -= poly_eval(full, r) / d;
        }
        double scale = 0.0;
        const double ar = std::max(1.0, std::abs(r));
        double power = 1.0;
        for (double c : full) {
            scale += std::abs(c) * power;
            power *= ar;
        }
        if (std::abs(poly_eval(full, r)) > 1e-10 * scale)
            throw NumericalError("pole decomposition: root residual above tolerance");
        // Overdamped roots are exactly real in the lambda variable; snap
        // eigen-solver noise onto the axis.
        if (std::abs(r.imag()) <= 1e-12 * std::abs(r)) r = cd(r.real(), 0.0);
        if (!(r.real() > 0.0))
            throw NumericalError("pole decomposition: acausal root");
    }

    double max_mag = 0.0;
    for (const cd& r : roots) max_mag = std::max(max_mag, std::abs(r));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) <= 1e-8 * max_mag)
                throw NumericalError("pole decomposition: near-degenerate roots");

    PoleSet set;
    // Weight of each simple pole of G: w_k = -(1 - tau lambda_k) / D_lambda'(lambda_k).
    for (const cd& r : roots) {
        const cd w = -(1.0 - p.tau * r) / poly_deriv_eval(full, r);
        set.terms.push_back({r, w});
    }
    set.static_term = deflated_zero ? 1.0 / p.zeta : 0.0;

    // Consistency: G(0) = 0 and the sum rule Gdot(0) = 1/m.
    double g0 = set.static_term;
    double gd0 = 0.0;
    double wscale = std::abs(set.static_term);
    for (const auto& t : set.terms) {
        g0 += t.weight.real();
        gd0 -= (t.lambda * t.weight).real();
        wscale += std::abs(t.weight);
    }
    if (std::abs(g0) > 1e-10 * wscale)
        throw NumericalError("pole decomposition: weights violate G(0) = 0");
    if (std::abs(gd0 - 1.0 / p.m) > 1e-8 / p.m)
        throw NumericalError("pole decomposition: weights violate the sum rule");
    return set;
}

}  // namespace qbm
