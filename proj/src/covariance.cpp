#include "qbm/covariance.hpp"

#include <cmath>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

void require_time(double t) {
    if (!(t >= 0.0)) throw DomainError("exponent evaluation requires t >= 0");
}

}  // namespace

ExponentFn exponent_eval(const KernelSet& ks, const WidthMatrix& a, double t) {
    require_time(t);
    a.validate();
    const PhysicalParams p = ks.params();
    const double m = p.m;
    const double hb = p.hbar;
    const double v2 = ks.velocity_variance();
    const GreenPair gr = ks.green_function(t);

    if (p.omega0 == 0.0) {
        const double s = ks.msd(t);
        const double sdot = ks.msd_dot(t);
        const double delta = a.symmetric() ? (a.a11 - a.a12) * (a.a11 + a.a12)
                                           : a.a11 * a.a22 - a.a12 * a.a12;
        return [=, aw = a](const ChiPoint& x) {
            const double l1 = gr.G * x.P1 + m * gr.Gdot * x.Q1;
            const double l2 = gr.G * x.P2 + m * gr.Gdot * x.Q2;
            double e = -(aw.a11 * l1 * l1 + 2.0 * aw.a12 * l1 * l2 + aw.a22 * l2 * l2) / 8.0;
            e -= (aw.a22 * x.P1 * x.P1 - 2.0 * aw.a12 * x.P1 * x.P2 + aw.a11 * x.P2 * x.P2) /
                 (2.0 * hb * hb * delta);
            e -= (s * x.P1 * x.P1 + m * sdot * x.P1 * x.Q1 + m * m * v2 * x.Q1 * x.Q1 +
                  s * x.P2 * x.P2 + m * sdot * x.P2 * x.Q2 + m * m * v2 * x.Q2 * x.Q2) /
                 (2.0 * hb * hb);
            return e;
        };
    }

    const OscCorrelation oc = ks.oscillator_correlation(t);
    if (!(oc.x2 > 0.0)) throw NumericalError("oscillator exponent: <x^2> must be positive");
    const double inv_x2 = 1.0 / oc.x2;
    const double den =
        (a.a11 + inv_x2) * (a.a22 + inv_x2) - a.a12 * a.a12;
    if (!(den > 0.0)) throw UnphysicalInputError("oscillator exponent: singular width combination");
    return [=, aw = a](const ChiPoint& x) {
        const double l1 = gr.G * x.P1 + m * gr.Gdot * x.Q1;
        const double l2 = gr.G * x.P2 + m * gr.Gdot * x.Q2;
        const double k1 = (oc.c * x.P1 + m * oc.cdot * x.Q1) * inv_x2;
        const double k2 = (oc.c * x.P2 + m * oc.cdot * x.Q2) * inv_x2;
        double e = -(aw.a11 * l1 * l1 + 2.0 * aw.a12 * l1 * l2 + aw.a22 * l2 * l2) / 8.0;
        e -= (oc.x2 * (x.P1 * x.P1 - k1 * k1) + m * m * v2 * x.Q1 * x.Q1 +
              oc.x2 * (x.P2 * x.P2 - k2 * k2) + m * m * v2 * x.Q2 * x.Q2) /
             (2.0 * hb * hb);
        e -= ((aw.a22 + inv_x2) * k1 * k1 - 2.0 * aw.a12 * k1 * k2 + (aw.a11 + inv_x2) * k2 * k2) /
             (2.0 * hb * hb * den);
        return e;
    };
}

Eigen::Matrix4d extract_covariance(const ExponentFn& e, double L, double hbar) {
    if (!(L > 0.0) || !(hbar > 0.0))
        throw DomainError("extract_covariance: L and hbar must be positive");
    const double origin = e(ChiPoint{});
    if (!(std::abs(origin) <= 1e-12))
        throw NonQuadraticError("exponent does not vanish at the origin");

    // Dimensionless basis points: unit X_i components.
    const ChiPoint basis[4] = {{hbar / L, 0.0, 0.0, 0.0},
                               {0.0, L, 0.0, 0.0},
                               {0.0, 0.0, hbar / L, 0.0},
                               {0.0, 0.0, 0.0, L}};
    auto add = [](const ChiPoint& u, const ChiPoint& v, double scale_v = 1.0) {
        return ChiPoint{u.P1 + scale_v * v.P1, u.Q1 + scale_v * v.Q1, u.P2 + scale_v * v.P2,
                        u.Q2 + scale_v * v.Q2};
    };

    Eigen::Matrix4d M;
    double ev[4];
    for (int i = 0; i < 4; ++i) ev[i] = e(basis[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double mij = -(e(add(basis[i], basis[j])) - ev[i] - ev[j]);
            M(i, j) = mij;
            M(j, i) = mij;
        }

    // Third-order probe: a genuine quadratic form with e(0) = 0 satisfies
    // e(2v) = 4 e(v) exactly.
    ChiPoint probe{0.7 * hbar / L, -0.3 * L, 0.2 * hbar / L, 0.5 * L};
    const double e1 = e(probe);
    const double e2 = e(add(probe, probe));
    if (!(std::abs(e2 - 4.0 * e1) <= 1e-10 * std::max(1.0, std::abs(4.0 * e1))))
        throw NonQuadraticError("exponent fails the quadratic scaling probe");
    return M;
}

Eigen::Matrix4d assemble_free(const KernelSet& ks, const WidthMatrix& a, double t, double L) {
    require_time(t);
    a.validate();
    if (!(L > 0.0)) throw DomainError("assemble_free: L must be positive");
    if (!a.symmetric())
        throw DomainError("assemble_free: requires a symmetric width matrix");
    const PhysicalParams& p = ks.params();
    if (p.omega0 != 0.0)
        throw DomainError("assemble_free: requires a free particle (omega0 == 0)");

    const double m = p.m;
    const double hb = p.hbar;
    const GreenPair gr = ks.green_function(t);
    const double s = ks.msd(t);
    const double sdot = ks.msd_dot(t);
    const double v2 = ks.velocity_variance();
    // Difference of squares: the near-singular widths of interest have
    // a11 - a12 << a11, where a11^2 - a12^2 would cancel catastrophically.
    const double d = (a.a11 - a.a12) * (a.a11 + a.a12);

    const double hg = hb * gr.G / 2.0;
    const double mgd = m * gr.Gdot / 2.0;
    const double g11 = (a.a11 / d + hg * hg * a.a11 + s) / (L * L);
    const double g12 = hg * mgd * a.a11 + m * sdot / (2.0 * hb);
    const double g22 = L * L * (m * m * v2 / (hb * hb) + mgd * mgd * a.a11);
    const double c11 = (-a.a12 / d + hg * hg * a.a12) / (L * L);
    const double c12 = hg * mgd * a.a12;
    const double c22 = L * L * mgd * mgd * a.a12;

    Eigen::Matrix4d M;
    M << g11, g12, c11, c12,
         g12, g22, c12, c22,
         c11, c12, g11, g12,
         c12, c22, g12, g22;
    return M;
}

Eigen::Matrix4d initial_covariance(const KernelSet& ks, const WidthMatrix& a, double L) {
    a.validate();
    if (!(L > 0.0)) throw DomainError("initial_covariance: L must be positive");
    const PhysicalParams& p = ks.params();
    if (p.omega0 != 0.0)
        throw DomainError("initial_covariance: requires a free particle (omega0 == 0)");
    const double m = p.m;
    const double hb = p.hbar;
    const double v2 = ks.velocity_variance();
    const double delta = a.symmetric() ? (a.a11 - a.a12) * (a.a11 + a.a12)
                                       : a.a11 * a.a22 - a.a12 * a.a12;

    Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
    M(0, 0) = a.a22 / (delta * L * L);
    M(2, 2) = a.a11 / (delta * L * L);
    M(0, 2) = M(2, 0) = -a.a12 / (delta * L * L);
    M(1, 1) = L * L * (a.a11 / 4.0 + m * m * v2 / (hb * hb));
    M(3, 3) = L * L * (a.a22 / 4.0 + m * m * v2 / (hb * hb));
    M(1, 3) = M(3, 1) = L * L * a.a12 / 4.0;
    return M;
}

}  // namespace qbm
