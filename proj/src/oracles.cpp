#include "qbm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "qbm/covariance.hpp"
#include "qbm/duan.hpp"
#include "qbm/errors.hpp"
#include "qbm/kernels.hpp"

namespace qbm {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286;

// ---------------------------------------------------------------------------
// Adaptive Simpson integration (deliberately a different elementary rule and
// refinement strategy than the production Gauss-Kronrod engine).
// ---------------------------------------------------------------------------

double simpson_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double flm = f(0.5 * (a + m));
    const double frm = f(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= 50 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Floor the tolerance at the roundoff level of the coarse estimate so an
    // unreachable absolute target cannot force full-depth recursion.
    const double eff = std::max(tol, 5e-14 * std::abs(whole));
    return simpson_recurse(f, a, b, fa, fm, fb, whole, eff, 0);
}

double simpson_tail(const std::function<double(double)>& f, double a, double tol) {
    const double theta_max = 1.5707963267948966;
    auto mapped = [&](double theta) {
        if (theta >= theta_max * (1.0 - 1e-14)) return 0.0;
        const double t = std::tan(theta);
        const double sec = 1.0 / std::cos(theta);
        return f(a + t) * sec * sec;
    };
    return simpson(mapped, 0.0, theta_max, tol);
}

// ---------------------------------------------------------------------------
// Oracle spectral integrands. Im alpha is formed from the complex ratio
// directly (not the production identity), and omega = 0 is handled through
// explicit limit values because Simpson evaluates interval endpoints.
// ---------------------------------------------------------------------------

double oracle_im_alpha(const PhysicalParams& p, double w) {
    const std::complex<double> num(1.0, -w * p.tau);
    const std::complex<double> den =
        p.m * (p.omega0 * p.omega0 - w * w) * num - std::complex<double>(0.0, w * p.zeta);
    return std::imag(num / den);
}

struct OracleIntegrand {
    std::function<double(double)> f;  // value for w > 0
    double limit0 = 0.0;              // value at w = 0
    double operator()(double w) const { return w == 0.0 ? limit0 : f(w); }
};

double bath_scale(const PhysicalParams& p) {
    double s = p.gamma();
    if (p.omega0 > s) s = p.omega0;
    if (p.tau > 0.0 && 1.0 / p.tau > s) s = 1.0 / p.tau;
    const double thermal = 2.0 * p.temperature * p.gamma();
    if (thermal > s) s = thermal;
    return s;
}

// Crude L1-norm proxy used to convert relative targets into absolute
// tolerances. Sampling |f| cannot cancel, unlike a coarse integral of an
// oscillatory f.
double l1_scale(const std::function<double(double)>& f, double a, double b) {
    const int n = 128;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) acc += std::abs(f(a + (b - a) * i / n));
    return acc * (b - a) / (n + 1) + 1e-300;
}

}  // namespace

double oracle_kernel(const PhysicalParams& p, double t, OracleKind kind) {
    p.validate();
    if (!(t >= 0.0)) throw DomainError("oracle kernel requires t >= 0");
    if (kind == OracleKind::v2 && p.tau == 0.0)
        throw DivergenceError("velocity variance diverges for an Ohmic bath");
    if ((kind == OracleKind::c || kind == OracleKind::x2) && !(p.omega0 > 0.0))
        throw DomainError("position correlation requires omega0 > 0");

    const bool free_particle = p.omega0 == 0.0;
    const double gamma = p.gamma();
    const double Tstar = p.temperature;
    auto coth = [&p](double w) { return p.coth_factor(w); };
    auto weight = [&, coth](double w) { return oracle_im_alpha(p, w) * coth(w); };

    // Limits of coth-weighted combinations as w -> 0 (finite in every case
    // the integral converges; see the corresponding kernel definitions).
    double weight_limit0 = 0.0;
    if (Tstar > 0.0 && !free_particle) {
        const double osc4 = p.m * p.m * p.omega0 * p.omega0 * p.omega0 * p.omega0;
        weight_limit0 = 2.0 * Tstar * gamma * p.zeta / osc4;
    }

    const double w0 = 10.0 * bath_scale(p);
    const double pref_g = 2.0 / kPi;
    const double pref_s = 2.0 * p.hbar / kPi;
    const double pref_x = p.hbar / kPi;

    auto integrate_monotone = [&](const OracleIntegrand& g) {
        auto fn = [&g](double w) { return g(w); };
        const double tol = 1e-10 * l1_scale(fn, 0.0, w0);
        return simpson(fn, 0.0, w0, tol) + simpson_tail(fn, w0, tol);
    };

    if (kind == OracleKind::v2) {
        OracleIntegrand g{[&](double w) { return w * w * weight(w); }, 0.0};
        if (Tstar > 0.0 && free_particle) g.limit0 = 2.0 * Tstar * gamma / p.zeta;
        return pref_x * integrate_monotone(g);
    }
    if (kind == OracleKind::x2 || (kind == OracleKind::c && t == 0.0)) {
        OracleIntegrand g{[&](double w) { return weight(w); }, weight_limit0};
        return pref_x * integrate_monotone(g);
    }
    if (t == 0.0) {
        if (kind == OracleKind::Gdot) {
            OracleIntegrand g{[&](double w) { return w * oracle_im_alpha(p, w); },
                              free_particle ? 1.0 / p.zeta : 0.0};
            return pref_g * integrate_monotone(g);
        }
        return 0.0;  // G, s, sdot
    }

    const double panel = kPi / t;
    const double head_end = panel * std::ceil(w0 * t / kPi);

    OracleIntegrand head;
    OracleIntegrand osc;  // oscillatory tail integrand (w >= head_end > 0)
    double pref = 0.0;
    bool one_minus_cos = false;
    switch (kind) {
        case OracleKind::G:
            pref = pref_g;
            head = {[&](double w) { return oracle_im_alpha(p, w) * std::sin(w * t); },
                    free_particle ? t / p.zeta : 0.0};
            osc = head;
            break;
        case OracleKind::Gdot:
            pref = pref_g;
            head = {[&](double w) { return w * oracle_im_alpha(p, w) * std::cos(w * t); },
                    free_particle ? 1.0 / p.zeta : 0.0};
            osc = head;
            break;
        case OracleKind::sdot:
            pref = pref_s;
            head = {[&](double w) { return weight(w) * w * std::sin(w * t); },
                    Tstar > 0.0 && free_particle ? 2.0 * Tstar * gamma * t / p.zeta : 0.0};
            osc = head;
            break;
        case OracleKind::c:
            pref = pref_x;
            head = {[&](double w) { return weight(w) * std::cos(w * t); }, weight_limit0};
            osc = head;
            break;
        case OracleKind::s:
            pref = pref_s;
            head = {[&](double w) { return weight(w) * (1.0 - std::cos(w * t)); },
                    Tstar > 0.0 && free_particle ? Tstar * gamma * t * t / p.zeta : 0.0};
            osc = {[&](double w) { return weight(w) * std::cos(w * t); }, 0.0};
            one_minus_cos = true;
            break;
        default:
            throw DomainError("oracle kernel: unhandled kind");
    }

    auto head_fn = [&head](double w) { return head(w); };
    const double scale = l1_scale(head_fn, 0.0, head_end);
    const double tol = 1e-10 * scale;
    // The head is summed per half-period panel: a dyadic split of the whole
    // window would sample sin(w t) exactly at its zeros and terminate on a
    // spurious zero estimate.
    const int n_head = static_cast<int>(std::lround(head_end / panel));
    double head_val = 0.0;
    for (int k = 0; k < n_head; ++k)
        head_val += simpson(head_fn, k * panel, (k + 1) * panel, tol / n_head);

    // Alternating half-period panels summed plainly; for an alternating
    // series the remainder is bounded by the first omitted panel.
    auto osc_fn = [&osc](double w) { return osc(w); };
    const double stop = 1e-9 * scale + 1e-16;
    double osc_sum = 0.0;
    bool converged = false;
    for (int k = 0; k < 200000; ++k) {
        const double lo = head_end + k * panel;
        const double piece = simpson(osc_fn, lo, lo + panel, 0.05 * stop);
        osc_sum += piece;
        if (k >= 3 && std::abs(piece) <= stop) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NumericalError("oracle kernel: oscillatory tail did not converge");

    double tail = osc_sum;
    if (one_minus_cos) {
        auto plateau = [&weight](double w) { return weight(w); };
        tail = simpson_tail(plateau, head_end, tol) - osc_sum;
    }
    return pref * (head_val + tail);
}

double det4_bruteforce(const Eigen::Matrix4d& M) {
    auto det3 = [&M](int r0, int r1, int r2, int c0, int c1, int c2) {
        return M(r0, c0) * (M(r1, c1) * M(r2, c2) - M(r1, c2) * M(r2, c1)) -
               M(r0, c1) * (M(r1, c0) * M(r2, c2) - M(r1, c2) * M(r2, c0)) +
               M(r0, c2) * (M(r1, c0) * M(r2, c1) - M(r1, c1) * M(r2, c0));
    };
    return M(0, 0) * det3(1, 2, 3, 1, 2, 3) - M(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           M(0, 2) * det3(1, 2, 3, 0, 1, 3) - M(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

PptVerdict ppt_simon_oracle(const Eigen::Matrix4d& M) {
    const Eigen::Matrix2d A = M.block<2, 2>(0, 0);
    const Eigen::Matrix2d B = M.block<2, 2>(2, 2);
    const Eigen::Matrix2d C = M.block<2, 2>(0, 2);
    const double det_a = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    const double det_b = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
    const double det_c = C(0, 0) * C(1, 1) - C(0, 1) * C(1, 0);
    const double det_m = det4_bruteforce(M);

    // Partial transpose flips the sign of det C in the seralian.
    const double delta = det_a + det_b - 2.0 * det_c;
    double disc = delta * delta - 4.0 * det_m;
    if (disc < 0.0) {
        if (disc >= -1e-9 * std::max(1.0, delta * delta))
            disc = 0.0;
        else
            throw UnphysicalInputError("ppt oracle: negative discriminant");
    }
    double nu2 = 0.5 * (delta - std::sqrt(disc));
    if (nu2 < 0.0) {
        if (nu2 >= -1e-9 * std::max(1.0, std::abs(delta)))
            nu2 = 0.0;
        else
            throw UnphysicalInputError("ppt oracle: negative squared symplectic eigenvalue");
    }
    PptVerdict v;
    v.nu_minus = std::sqrt(nu2);
    v.margin = v.nu_minus - 0.5;
    v.separable = v.nu_minus >= 0.5;
    return v;
}

Eigen::Matrix4d random_symmetric_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double g = 0.55 + 4.45 * unif(rng);
        const double cmax = std::sqrt(g * g - 0.25);
        const double c = (2.0 * unif(rng) - 1.0) * cmax * 0.999;
        const double cp = (2.0 * unif(rng) - 1.0) * std::abs(c);
        // Physicality: the smaller symplectic eigenvalue of the state itself.
        const double nu2 = g * g + c * cp - g * std::abs(c + cp);
        if (nu2 < 0.25 * (1.0 + 1e-6)) continue;

        Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
        M(0, 0) = M(1, 1) = M(2, 2) = M(3, 3) = g;
        M(0, 2) = M(2, 0) = c;
        M(1, 3) = M(3, 1) = cp;

        // Conjugate by a local symplectic applied identically to both modes;
        // this preserves the block structure and every determinant invariant
        // while making the stored matrix non-trivial.
        const double theta = 2.0 * kPi * unif(rng);
        const double r = -0.6 + 1.2 * unif(rng);
        Eigen::Matrix2d rot;
        rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
        Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
        sq(0, 0) = std::exp(r);
        sq(1, 1) = std::exp(-r);
        const Eigen::Matrix2d s0 = rot * sq;
        Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
        S.block<2, 2>(0, 0) = s0;
        S.block<2, 2>(2, 2) = s0;
        return S.transpose() * M * S;
    }
    throw NumericalError("random state generator failed to find a physical state");
}

namespace {

// Closed-form Ohmic-limit kernels, written only with std library calls.
double ohmic_G(double zeta, double gamma, double t) {
    return (1.0 - std::exp(-gamma * t)) / zeta;
}
double ohmic_Gdot(double m, double gamma, double t) { return std::exp(-gamma * t) / m; }
double ohmic_s(double hbar, double zeta, double gamma, double t) {
    if (t == 0.0) return 0.0;
    const double x = gamma * t;
    const double e1_term = std::exp(x) * (-std::expint(-x));  // e^x E1(x)
    const double ei_term = std::exp(-x) * std::expint(x);     // e^-x Ei(x)
    return 2.0 * hbar / (kPi * zeta) *
           (std::log(x) + kEulerGamma + 0.5 * (e1_term - ei_term));
}

struct SuiteContext {
    std::mt19937_64 rng;
    ReferenceHooks hooks;
    std::vector<OracleCheck> checks;

    void record(const std::string& name, bool pass, double observed, double bound) {
        checks.push_back({name, pass, observed, bound});
    }
};

void check_sum_rule(SuiteContext& ctx) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        PhysicalParams p;
        p.m = 0.3 + 2.7 * unif(ctx.rng);
        p.zeta = 0.3 + 2.7 * unif(ctx.rng);
        p.tau = (i % 4 == 0) ? 0.0 : std::exp(std::log(0.02) + unif(ctx.rng) * std::log(10.0 / 0.02));
        p.omega0 = (i % 2 == 0) ? 0.0 : 0.2 + 2.8 * unif(ctx.rng);
        p.temperature = (i % 3 == 0) ? 0.0 : 0.05 + 1.95 * unif(ctx.rng);
        const double gd0 = ctx.hooks.g_scale * oracle_kernel(p, 0.0, OracleKind::Gdot);
        worst = std::max(worst, std::abs(gd0 * p.m - 1.0));
    }
    ctx.record("sum-rule", worst <= 1e-6, worst, 1e-6);
}

void check_ohmic_limit(SuiteContext& ctx) {
    PhysicalParams p;
    p.tau = 1e-4;
    KernelSet ks = KernelSet::make(p);
    double worst = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double t = 0.5 * i;
        const GreenPair gr = ks.green_function(t);
        const double g_ref = ohmic_G(p.zeta, p.gamma(), t);
        const double gd_ref = ohmic_Gdot(p.m, p.gamma(), t);
        const double s_ref = ohmic_s(p.hbar, p.zeta, p.gamma(), t);
        worst = std::max(worst, std::abs(ctx.hooks.g_scale * gr.G - g_ref) / std::abs(g_ref));
        worst = std::max(worst, std::abs(ctx.hooks.g_scale * gr.Gdot - gd_ref) /
                                    std::max(std::abs(gd_ref), 1e-3));
        worst = std::max(worst, std::abs(ks.msd(t) - s_ref) / std::abs(s_ref));
    }
    ctx.record("ohmic-limit", worst <= 1e-3, worst, 1e-3);

    PhysicalParams p0;  // exactly Ohmic
    KernelSet ks0 = KernelSet::make(p0);
    double worst0 = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double t = 0.5 * i;
        const GreenPair gr = ks0.green_function(t);
        worst0 = std::max(worst0, std::abs(ctx.hooks.g_scale * gr.G - ohmic_G(1.0, 1.0, t)));
        worst0 = std::max(worst0, std::abs(ks0.msd(t) - ohmic_s(1.0, 1.0, 1.0, t)));
    }
    ctx.record("ohmic-exact", worst0 <= 1e-10, worst0, 1e-10);
}

void check_kernel_oracle(SuiteContext& ctx) {
    const double taus[2] = {5.0, 0.2};
    const double ts[3] = {0.5, 2.5, 7.0};
    double worst = 0.0;
    for (double tau : taus) {
        PhysicalParams p;
        p.tau = tau;
        KernelSet ks = KernelSet::make(p);
        double impl[3][4];
        double ref[3][4];
        for (int i = 0; i < 3; ++i) {
            const GreenPair gr = ks.green_function(ts[i]);
            impl[i][0] = ctx.hooks.g_scale * gr.G;
            impl[i][1] = ctx.hooks.g_scale * gr.Gdot;
            impl[i][2] = ks.msd(ts[i]);
            impl[i][3] = ks.msd_dot(ts[i]);
            ref[i][0] = oracle_kernel(p, ts[i], OracleKind::G);
            ref[i][1] = oracle_kernel(p, ts[i], OracleKind::Gdot);
            ref[i][2] = oracle_kernel(p, ts[i], OracleKind::s);
            ref[i][3] = oracle_kernel(p, ts[i], OracleKind::sdot);
        }
        for (int k = 0; k < 4; ++k) {
            double mk = 0.0;
            for (int i = 0; i < 3; ++i) mk = std::max(mk, std::abs(ref[i][k]));
            for (int i = 0; i < 3; ++i) {
                const double denom = std::max(std::abs(ref[i][k]), 0.01 * mk);
                worst = std::max(worst, std::abs(impl[i][k] - ref[i][k]) / denom);
            }
        }
    }
    ctx.record("kernel-oracle", worst <= 1e-6, worst, 1e-6);
}

void check_two_path(SuiteContext& ctx) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        PhysicalParams p;
        do {
            p.tau = 0.3 + 7.7 * unif(ctx.rng);
        } while (std::abs(p.tau - 0.25) < 0.02);
        KernelSet ks = KernelSet::make(p);
        WidthMatrix a;
        a.a11 = 1.5 + 6.5 * unif(ctx.rng);
        a.a12 = a.a11 * (0.3 + 0.65 * unif(ctx.rng));
        a.a22 = a.a11;
        const double t = 6.0 * unif(ctx.rng);
        const double L = 0.5 + 1.5 * unif(ctx.rng);
        const Eigen::Matrix4d direct = assemble_free(ks, a, t, L);
        const Eigen::Matrix4d probed = extract_covariance(exponent_eval(ks, a, t), L, p.hbar);
        const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
        worst = std::max(worst, (direct - probed).cwiseAbs().maxCoeff() / scale);
    }
    ctx.record("two-path", worst <= 1e-10, worst, 1e-10);
}

void check_duan_ppt(SuiteContext& ctx) {
    int disagreements = 0;
    double worst_det = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Eigen::Matrix4d M = random_symmetric_state(ctx.rng);
        const BlockInvariants inv = block_invariants(M);
        const double brute = det4_bruteforce(M);
        worst_det = std::max(worst_det, std::abs(inv.det_m - brute) / std::max(1.0, std::abs(brute)));
        const DuanVerdict duan = duan_verdict(reduce(inv));
        const PptVerdict ppt = ppt_simon_oracle(M);
        if (std::abs(duan.margin) <= 1e-9) continue;
        if (duan.separable != ppt.separable) ++disagreements;
    }
    ctx.record("duan-ppt", disagreements == 0, static_cast<double>(disagreements), 0.0);
    ctx.record("det-factored", worst_det <= 1e-10, worst_det, 1e-10);
}

void check_squeezed(SuiteContext& ctx) {
    double worst = 0.0;
    for (double r : {0.1, 0.5, 1.0}) {
        Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
        const double g = 0.5 * std::cosh(2.0 * r);
        const double c = 0.5 * std::sinh(2.0 * r);
        M(0, 0) = M(1, 1) = M(2, 2) = M(3, 3) = g;
        M(0, 2) = M(2, 0) = c;
        M(1, 3) = M(3, 1) = -c;
        const DuanVerdict v = duan_verdict(reduce(block_invariants(M)));
        worst = std::max(worst, std::abs(v.lhs - 0.5 * std::exp(-2.0 * r)));
    }
    ctx.record("squeezed", worst <= 1e-12, worst, 1e-12);
}

void check_derivative(SuiteContext& ctx) {
    PhysicalParams p;
    p.tau = 5.0;
    KernelSet ks = KernelSet::make(p);
    const double h = 1e-3;
    double worst = 0.0;
    for (double t : {1.0, 2.5, 7.0}) {
        const double sd = ks.msd_dot(t);
        const double sd_fd = (ks.msd(t + h) - ks.msd(t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(sd_fd - sd) / std::max(1.0, std::abs(sd)));
        const double gd = ctx.hooks.g_scale * ks.green_function(t).Gdot;
        const double gd_fd = ctx.hooks.g_scale *
                             (ks.green_function(t + h).G - ks.green_function(t - h).G) / (2.0 * h);
        worst = std::max(worst, std::abs(gd_fd - gd) / std::max(1.0, std::abs(gd)));
    }
    ctx.record("derivative", worst <= 1e-5, worst, 1e-5);
}

void check_scale_invariance(SuiteContext& ctx) {
    PhysicalParams p;
    p.tau = 5.0;
    KernelSet ks = KernelSet::make(p);
    WidthMatrix a;  // defaults: the strongly correlated configuration
    double worst = 0.0;
    double min_det_g = 1e300;
    for (double t : {0.0, 1.2, 2.5, 6.0}) {
        ReducedForm base;
        bool first = true;
        for (double lscale : {0.1, 1.0, 10.0}) {
            const double L = lscale * std::sqrt(p.hbar / p.zeta);
            const BlockInvariants inv = block_invariants(assemble_free(ks, a, t, L));
            min_det_g = std::min(min_det_g, inv.det_g);
            const ReducedForm rf = reduce(inv);
            if (first) {
                base = rf;
                first = false;
                continue;
            }
            worst = std::max(worst, std::abs(rf.g - base.g) / std::abs(base.g));
            worst = std::max(worst, std::abs(rf.c - base.c) / std::max(1e-3, std::abs(base.c)));
            worst = std::max(worst,
                             std::abs(rf.cprime - base.cprime) / std::max(1e-3, std::abs(base.cprime)));
        }
    }
    ctx.record("scale-invariance", worst <= 1e-12, worst, 1e-12);
    ctx.record("det-positivity", min_det_g >= 0.25 * (1.0 - 1e-9), min_det_g, 0.25 * (1.0 - 1e-9));
}

}  // namespace

OracleReport reference_suite(std::uint64_t seed, const ReferenceHooks& hooks) {
    SuiteContext ctx{std::mt19937_64(seed), hooks, {}};
    check_sum_rule(ctx);
    check_ohmic_limit(ctx);
    check_kernel_oracle(ctx);
    check_two_path(ctx);
    check_duan_ppt(ctx);
    check_squeezed(ctx);
    check_derivative(ctx);
    check_scale_invariance(ctx);
    OracleReport report;
    report.checks = std::move(ctx.checks);
    report.all_pass = true;
    for (const OracleCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace qbm
