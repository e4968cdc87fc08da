#include "qbm/kernels.hpp"

#include <cmath>
#include <functional>

#include "qbm/errors.hpp"
#include "qbm/exp_integrals.hpp"
#include "qbm/quadrature.hpp"

namespace qbm {
namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286;

// ---------------------------------------------------------------------------
// Quadrature path: defining spectral integrals over the real frequency axis.
// Gauss-Kronrod nodes are interior, so integrands are never evaluated at
// omega = 0 and need no explicit limit values.
// ---------------------------------------------------------------------------

enum class Kind { G, Gdot, s, sdot, c, x2, v2 };

double bath_frequency_scale(const PhysicalParams& p) {
    double s = p.gamma();
    if (p.omega0 > s) s = p.omega0;
    if (p.tau > 0.0 && 1.0 / p.tau > s) s = 1.0 / p.tau;
    const double thermal = 2.0 * p.temperature * p.gamma();
    if (thermal > s) s = thermal;
    return s;
}

double quadrature_kernel(const PhysicalParams& p, double t, Kind kind) {
    const double pref_g = 2.0 / kPi;
    const double pref_s = 2.0 * p.hbar / kPi;
    const double pref_x = p.hbar / kPi;

    auto weight = [&p](double w) { return p.im_alpha(w) * p.coth_factor(w); };

    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 1e-15;

    const double w0 = 10.0 * bath_frequency_scale(p);

    // Non-oscillatory moments.
    if (kind == Kind::v2) {
        auto f = [&](double w) { return w * w * weight(w); };
        return pref_x * (integrate_adaptive(f, 0.0, w0, opt) + integrate_tail_monotone(f, w0, opt));
    }
    if (kind == Kind::x2 || (kind == Kind::c && t == 0.0)) {
        auto f = [&](double w) { return weight(w); };
        return pref_x * (integrate_adaptive(f, 0.0, w0, opt) + integrate_tail_monotone(f, w0, opt));
    }
    if (t == 0.0) {
        if (kind == Kind::Gdot) {
            auto f = [&](double w) { return w * p.im_alpha(w); };
            return pref_g *
                   (integrate_adaptive(f, 0.0, w0, opt) + integrate_tail_monotone(f, w0, opt));
        }
        return 0.0;  // G, s, sdot vanish at t = 0
    }

    // Oscillatory kernels: adaptive head up to a half-period boundary, then
    // sign-alternating half-period panels accelerated with Wynn's epsilon.
    const double panel = kPi / t;
    const double head_end = panel * std::ceil(w0 * t / kPi);

    std::function<double(double)> full;   // integrand on the head
    std::function<double(double)> osc;    // oscillatory tail integrand
    double pref = 0.0;
    switch (kind) {
        case Kind::G:
            pref = pref_g;
            full = [&](double w) { return p.im_alpha(w) * std::sin(w * t); };
            osc = full;
            break;
        case Kind::Gdot:
            pref = pref_g;
            full = [&](double w) { return w * p.im_alpha(w) * std::cos(w * t); };
            osc = full;
            break;
        case Kind::sdot:
            pref = pref_s;
            full = [&](double w) { return weight(w) * w * std::sin(w * t); };
            osc = full;
            break;
        case Kind::c:
            pref = pref_x;
            full = [&](double w) { return weight(w) * std::cos(w * t); };
            osc = full;
            break;
        case Kind::s:
            pref = pref_s;
            full = [&](double w) { return weight(w) * (1.0 - std::cos(w * t)); };
            osc = [&](double w) { return weight(w) * std::cos(w * t); };
            break;
        default:
            throw DomainError("quadrature kernel: unhandled kind");
    }

    const double head = integrate_adaptive(full, 0.0, head_end, opt);
    const double scale = std::abs(head) + 1e-30;
    double tail = 0.0;
    if (kind == Kind::s) {
        // (1 - cos) tail: monotone plateau part minus the oscillatory part.
        auto plateau = [&](double w) { return weight(w); };
        tail = integrate_tail_monotone(plateau, head_end, opt) -
               integrate_tail_alternating(osc, head_end, panel, scale, opt);
    } else {
        tail = integrate_tail_alternating(osc, head_end, panel, scale, opt);
    }
    return pref * (head + tail);
}

// ---------------------------------------------------------------------------
// Analytic path: residue sums over the decaying modes.  The oscillatory
// time-dependence enters through the exponential-integral primitives
//   Jp = e^{lt} E1(lt),  Jm = e^{-lt} E1(-lt) (+ branch/cut terms),
//   C = (Jp+Jm)/2,       S = (Jp-Jm)/(2i),
// where Jm picks up -2*pi*i e^{-lt} when the mirror pole is crossed
// (Im lambda > 0) and takes the principal-value cut value for real lambda.
// ---------------------------------------------------------------------------

struct Primitives {
    cd C;
    cd S;
};

Primitives primitives(cd lambda, double t) {
    const cd zt = lambda * t;
    const cd jp = exp_e1(zt);
    cd jm;
    if (lambda.imag() == 0.0) {
        const double x = lambda.real() * t;
        jm = cd(-exp_ei(x), -kPi * std::exp(-x));
    } else if (lambda.imag() > 0.0) {
        jm = exp_e1(-zt) - cd(0.0, 2.0 * kPi) * std::exp(-zt);
    } else {
        jm = exp_e1(-zt);
    }
    return {0.5 * (jp + jm), (jp - jm) / cd(0.0, 2.0)};
}

double poles_G(const PoleSet& ps, double t) {
    if (t == 0.0) return 0.0;  // identity enforced when the set is built
    double g = ps.static_term;
    for (const auto& term : ps.terms) g += (term.weight * std::exp(-term.lambda * t)).real();
    return g;
}

double poles_Gdot(const PoleSet& ps, double t) {
    double g = 0.0;
    for (const auto& term : ps.terms)
        g -= (term.lambda * term.weight * std::exp(-term.lambda * t)).real();
    return g;
}

double poles_s(const PoleSet& ps, double hbar, double t) {
    if (t == 0.0) return 0.0;
    double sum = ps.static_term * (std::log(t) + kEulerGamma);
    for (const auto& term : ps.terms) {
        const cd prim = primitives(term.lambda, t).C;
        sum -= (term.weight * (std::log(term.lambda) + cd(0.0, kPi / 2.0) + prim)).real();
    }
    return 2.0 * hbar / kPi * sum;
}

double poles_sdot(const PoleSet& ps, double hbar, double t) {
    if (t == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& term : ps.terms) {
        const cd prim = primitives(term.lambda, t).S;
        sum += (cd(0.0, -1.0) * term.lambda * term.weight * prim).real();
    }
    return 2.0 * hbar / kPi * sum;
}

double poles_v2(const PoleSet& ps, double hbar) {
    double sum = 0.0;
    for (const auto& term : ps.terms) {
        const cd lg = std::log(term.lambda) + cd(0.0, kPi / 2.0);
        sum += (term.weight * term.lambda * term.lambda * lg).real();
    }
    return hbar / kPi * sum;
}

double poles_x2(const PoleSet& ps, double hbar) {
    double sum = 0.0;
    for (const auto& term : ps.terms)
        sum -= (term.weight * (std::log(term.lambda) + cd(0.0, kPi / 2.0))).real();
    return hbar / kPi * sum;
}

double poles_c(const PoleSet& ps, double hbar, double t) {
    if (t == 0.0) return poles_x2(ps, hbar);
    double sum = 0.0;
    for (const auto& term : ps.terms)
        sum += (term.weight * primitives(term.lambda, t).C).real();
    return hbar / kPi * sum;
}

double poles_cdot(const PoleSet& ps, double hbar, double t) {
    if (t == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& term : ps.terms)
        sum += (cd(0.0, 1.0) * term.lambda * term.weight * primitives(term.lambda, t).S).real();
    return hbar / kPi * sum;
}

void require_time(double t) {
    if (!(t >= 0.0)) throw DomainError("kernel evaluation requires t >= 0");
}

}  // namespace

KernelSet KernelSet::make(const PhysicalParams& p, KernelMethod method) {
    p.validate();
    if (method == KernelMethod::analytic_poles) {
        try {
            PoleSet ps = decompose_response(p);
            return KernelSet(p, KernelMethod::analytic_poles, false, std::move(ps));
        } catch (const NumericalError&) {
            return KernelSet(p, KernelMethod::quadrature, true, std::nullopt);
        }
    }
    return KernelSet(p, KernelMethod::quadrature, false, std::nullopt);
}

GreenPair KernelSet::green_function(double t) const {
    require_time(t);
    if (poles_ && method_ == KernelMethod::analytic_poles)
        return {poles_G(*poles_, t), poles_Gdot(*poles_, t)};
    if (t == 0.0) return {0.0, quadrature_kernel(p_, 0.0, Kind::Gdot)};
    return {quadrature_kernel(p_, t, Kind::G), quadrature_kernel(p_, t, Kind::Gdot)};
}

double KernelSet::msd(double t) const {
    require_time(t);
    if (analytic_moments()) return poles_s(*poles_, p_.hbar, t);
    return quadrature_kernel(p_, t, Kind::s);
}

double KernelSet::msd_dot(double t) const {
    require_time(t);
    if (analytic_moments()) return poles_sdot(*poles_, p_.hbar, t);
    return quadrature_kernel(p_, t, Kind::sdot);
}

double KernelSet::velocity_variance() const {
    if (p_.tau == 0.0)
        throw DivergenceError(
            "velocity variance diverges for an Ohmic bath (no high-frequency cutoff)");
    if (analytic_moments()) return poles_v2(*poles_, p_.hbar);
    return quadrature_kernel(p_, 0.0, Kind::v2);
}

OscCorrelation KernelSet::oscillator_correlation(double t) const {
    require_time(t);
    if (!(p_.omega0 > 0.0))
        throw DomainError("oscillator correlation requires omega0 > 0");
    OscCorrelation out;
    if (analytic_moments()) {
        out.c = poles_c(*poles_, p_.hbar, t);
        out.cdot = poles_cdot(*poles_, p_.hbar, t);
        out.x2 = poles_x2(*poles_, p_.hbar);
        return out;
    }
    out.c = quadrature_kernel(p_, t, Kind::c);
    out.cdot = -0.5 * quadrature_kernel(p_, t, Kind::sdot);
    out.x2 = quadrature_kernel(p_, 0.0, Kind::x2);
    return out;
}

KernelPoint KernelSet::eval(double t) const {
    const GreenPair g = green_function(t);
    return {g.G, g.Gdot, msd(t), msd_dot(t)};
}

}  // namespace qbm
