#include "qbm/exp_integrals.hpp"

#include <cmath>
#include <limits>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

constexpr double kEulerGamma = 0.57721566490153286;
using cd = std::complex<double>;

// Divergent asymptotic series e^w E1(w) ~ sum_k (-1)^k k! / w^{k+1},
// truncated at the smallest term. At |w| >= 34 the truncation error is
// below 3e-14 relative and shrinks exponentially with |w|.
cd asymptotic_series(cd w) {
    cd term = 1.0 / w;
    cd sum = term;
    double prev_mag = std::abs(term);
    for (int k = 1; k <= 60; ++k) {
        term *= -static_cast<double>(k) / w;
        const double mag = std::abs(term);
        if (mag >= prev_mag) break;  // past the optimal truncation point
        sum += term;
        if (mag < 1e-18 * std::abs(sum)) break;
        prev_mag = mag;
    }
    return sum;
}

// Power series E1(w) = -gamma - log w + sum_{k>=1} (-1)^{k+1} w^k / (k k!),
// multiplied by e^w. Used where the largest series term does not dwarf
// |E1(w)| ~ e^{-Re w}/|w|, i.e. where |w| + Re w is small.
cd power_series(cd w) {
    cd p = 1.0;  // w^k / k!
    cd s = 0.0;
    for (int k = 1; k <= 400; ++k) {
        p *= w / static_cast<double>(k);
        const cd term = (k % 2 ? p : -p) / static_cast<double>(k);
        s += term;
        if (std::abs(p) / k < 1e-18 * (std::abs(s) + 1.0) && k > 4) break;
    }
    return std::exp(w) * (-kEulerGamma - std::log(w) + s);
}

// Modified Lentz evaluation of the continued fraction
// e^w E1(w) = 1/(w+1- 1^2/(w+3- 2^2/(w+5- ...))). Fast for Re w > 0.
cd continued_fraction(cd w) {
    constexpr double tiny = 1e-300;
    cd b = w + 1.0;
    cd c = 1.0 / tiny;
    cd d = 1.0 / b;
    cd h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 3e-16) return h;
    }
    throw NumericalError("exp_e1 continued fraction failed to converge");
}

// One Taylor step of f(w) = e^w E1(w) along a ray toward the origin.
// f^{(n)}(w) = f(w) + p_n with p_n = sum_{j=1..n} (-1)^j (j-1)!/w^j, so
// f(w+dw) = f(w) e^{dw} + sum_{n>=1} p_n dw^n/n!; the factorial growth of
// p_n cancels against dw^n/n!, giving geometric convergence at rate |dw|/|w|.
cd taylor_step(cd w, cd f, cd dw) {
    cd g = -1.0 / w;  // (-1)^j (j-1)!/w^j
    cd p = g;
    cd dpow = dw;  // dw^n / n!
    cd acc = p * dpow;
    for (int n = 2; n <= 160; ++n) {
        g *= -static_cast<double>(n - 1) / w;
        p += g;
        dpow *= dw / static_cast<double>(n);
        const cd term = p * dpow;
        acc += term;
        if (std::abs(term) < 1e-18 * (std::abs(acc) + std::abs(f)) && n > 8) break;
    }
    return f * std::exp(dw) + acc;
}

// Left-half-plane band not covered by the power series: anchor on the same
// ray at |w| = 40 (asymptotic regime) and continue inward. The path stays on
// the ray, so the continuation agrees with the principal branch throughout.
cd ray_continuation(cd w) {
    const double r_target = std::abs(w);
    const cd unit = w / r_target;
    double r = 40.0;
    cd f = asymptotic_series(r * unit);
    while (r > r_target * (1.0 + 1e-12)) {
        const double r_next = std::max(r_target, 0.55 * r);
        f = taylor_step(r * unit, f, (r_next - r) * unit);
        r = r_next;
    }
    return f;
}

}  // namespace

std::complex<double> exp_e1(std::complex<double> w) {
    if (w == cd(0.0, 0.0)) throw DomainError("exp_e1: w = 0");
    if (w.imag() == 0.0 && w.real() < 0.0)
        throw DomainError("exp_e1: w on the branch cut (-inf, 0)");
    const double r = std::abs(w);
    if (r >= 34.0) return asymptotic_series(w);
    if (r + w.real() <= 7.0) return power_series(w);
    if (w.real() > 0.0) return continued_fraction(w);
    return ray_continuation(w);
}

double exp_ei(double x) {
    if (!(x > 0.0)) throw DomainError("exp_ei: requires x > 0");
    if (x <= 500.0) return std::exp(-x) * std::expint(x);
    // Asymptotic product series e^{-x} Ei(x) ~ sum_k k!/x^{k+1}; truncation
    // error ~ e^{-x} is far below double precision here.
    double term = 1.0 / x;
    double sum = term;
    for (int k = 1; k <= 60; ++k) {
        term *= static_cast<double>(k) / x;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace qbm
