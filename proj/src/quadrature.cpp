#include "qbm/quadrature.hpp"

#include <cmath>
#include <vector>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

// 15-point Kronrod extension of 7-point Gauss. Nodes are interior, so
// integrands never see interval endpoints (integrable endpoint behavior is
// handled by the adaptive splitting alone).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double value;
    double error;
};

PanelResult gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    return {kron * h, std::abs(kron - gauss) * std::abs(h)};
}

void integrate_recursive(const std::function<double(double)>& f, double a, double b,
                         const QuadratureOptions& opt, int depth, double global_scale,
                         double& total) {
    const PanelResult r = gauss_kronrod(f, a, b);
    if (r.error <= opt.rel_tol * std::abs(r.value) + opt.abs_tol + 1e-16 * global_scale ||
        depth >= opt.max_depth) {
        if (depth >= opt.max_depth && r.error > 1e3 * (opt.rel_tol * std::abs(r.value) + opt.abs_tol))
            throw NumericalError("adaptive quadrature: depth limit with large residual error");
        total += r.value;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_recursive(f, a, mid, opt, depth + 1, global_scale, total);
    integrate_recursive(f, mid, b, opt, depth + 1, global_scale, total);
}

// Latest anti-diagonal of Wynn's epsilon table; returns the highest usable
// even-column element as the current series estimate. A vanishing denominator
// means that column already converged; the sentinel it produces (and anything
// downstream of it) is skipped during selection.
class EpsilonTable {
  public:
    double add(double partial_sum) {
        std::vector<double> next(diag_.size() + 1);
        next[0] = partial_sum;
        double below_left = 0.0;  // epsilon_{-1} = 0
        for (std::size_t j = 1; j < next.size(); ++j) {
            const double denom = next[j - 1] - diag_[j - 1];
            next[j] = (denom == 0.0) ? kSentinel : below_left + 1.0 / denom;
            below_left = diag_[j - 1];
        }
        diag_ = std::move(next);
        std::size_t best = diag_.size() - 1;
        if (best % 2 != 0) --best;
        while (best > 0 && (!std::isfinite(diag_[best]) || std::abs(diag_[best]) >= 0.1 * kSentinel))
            best -= 2;
        return diag_[best];
    }

  private:
    static constexpr double kSentinel = 1e300;
    std::vector<double> diag_;
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    const PanelResult coarse = gauss_kronrod(f, a, b);
    double total = 0.0;
    integrate_recursive(f, a, b, opt, 0, std::abs(coarse.value), total);
    return total;
}

double integrate_tail_monotone(const std::function<double(double)>& f, double a,
                               const QuadratureOptions& opt) {
    const double theta_max = 1.5707963267948966;
    auto mapped = [&](double theta) {
        if (theta >= theta_max * (1.0 - 1e-14)) return 0.0;
        const double t = std::tan(theta);
        const double sec = 1.0 / std::cos(theta);
        return f(a + t) * sec * sec;
    };
    return integrate_adaptive(mapped, 0.0, theta_max, opt);
}

double integrate_tail_alternating(const std::function<double(double)>& f, double a,
                                  double panel, double scale,
                                  const QuadratureOptions& opt) {
    if (!(panel > 0.0)) throw DomainError("alternating tail: panel width must be positive");
    EpsilonTable eps;
    double partial = 0.0;
    double estimate = 0.0;
    double prev_estimate = 0.0;
    int stable = 0;
    const int max_panels = 700;
    for (int k = 0; k < max_panels; ++k) {
        const double lo = a + k * panel;
        const double hi = lo + panel;
        const double term = gauss_kronrod(f, lo, hi).value;
        partial += term;
        prev_estimate = estimate;
        estimate = eps.add(partial);
        const double tol = opt.rel_tol * (scale + std::abs(estimate)) + opt.abs_tol;
        if (k >= 3 && std::isfinite(estimate) && std::abs(estimate - prev_estimate) <= tol &&
            std::abs(term) <= 1e3 * tol)
            ++stable;
        else
            stable = 0;
        if (stable >= 2) return estimate;
        // A panel that is already negligible bounds the alternating remainder
        // by itself, so the plain partial sum is already within tolerance.
        if (std::abs(term) <= 0.01 * tol && k >= 3) return partial;
    }
    throw NumericalError("alternating tail series failed to converge");
}

}  // namespace qbm
