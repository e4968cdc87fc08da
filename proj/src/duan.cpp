#include "qbm/duan.hpp"

#include <cmath>
#include <limits>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

double det2(double a, double b, double c, double d) { return a * d - b * c; }

}  // namespace

BlockInvariants block_invariants(const Eigen::Matrix4d& M) {
    double scale = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(M(i, j)));
    if (!(scale > 0.0)) throw StructureError("block invariants: zero matrix");
    const double tol = 1e-10 * scale;

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(M(i, j) - M(j, i)) > tol)
                throw StructureError("block invariants: matrix is not symmetric");

    const Eigen::Matrix2d A = M.block<2, 2>(0, 0);
    const Eigen::Matrix2d B = M.block<2, 2>(2, 2);
    const Eigen::Matrix2d C = M.block<2, 2>(0, 2);
    if ((A - B).cwiseAbs().maxCoeff() > tol)
        throw StructureError("block invariants: particle blocks differ");
    if (std::abs(C(0, 1) - C(1, 0)) > tol)
        throw StructureError("block invariants: cross block is not symmetric");

    BlockInvariants inv;
    inv.det_g = det2(A(0, 0), A(0, 1), A(1, 0), A(1, 1));
    inv.det_c = det2(C(0, 0), C(0, 1), C(1, 0), C(1, 1));
    // For equal diagonal blocks and symmetric C the 4x4 determinant factors
    // exactly; the factored form avoids the near-total cancellation the
    // cofactor expansion suffers for the nearly singular states of interest.
    const Eigen::Matrix2d P = A + C;
    const Eigen::Matrix2d Q = A - C;
    inv.det_m = det2(P(0, 0), P(0, 1), P(1, 0), P(1, 1)) *
                det2(Q(0, 0), Q(0, 1), Q(1, 0), Q(1, 1));
    return inv;
}

ReducedForm reduce(const BlockInvariants& inv) {
    if (!(inv.det_g > 0.0))
        throw UnphysicalInputError("reduce: det G must be positive");
    const double g = std::sqrt(inv.det_g);
    // c^2 and c'^2 are the roots of u^2 - S u + (det C)^2 = 0.
    const double S = (inv.det_g * inv.det_g + inv.det_c * inv.det_c - inv.det_m) / inv.det_g;
    double disc = S * S - 4.0 * inv.det_c * inv.det_c;
    if (disc < 0.0) {
        if (disc >= -1e-10 * std::max(1.0, S * S))
            disc = 0.0;
        else
            throw UnphysicalInputError("reduce: reduced-form discriminant is negative");
    }
    double u = 0.5 * (S + std::sqrt(disc));
    if (u < 0.0) {
        if (u >= -1e-12 * std::max(1.0, std::abs(S)))
            u = 0.0;
        else
            throw UnphysicalInputError("reduce: negative squared cross width");
    }
    ReducedForm rf;
    rf.g = g;
    rf.c = std::sqrt(u);
    rf.cprime = rf.c > 0.0 ? inv.det_c / rf.c : 0.0;
    return rf;
}

DuanVerdict duan_verdict(const ReducedForm& rf) {
    double value = (rf.g - rf.c) * (rf.g + rf.cprime);
    if (value < 0.0) {
        if (value >= -1e-10 * std::max(1.0, rf.g * rf.g))
            value = 0.0;
        else
            throw UnphysicalInputError("separability test: negative product beyond roundoff");
    }
    DuanVerdict v;
    v.lhs = std::sqrt(value);
    v.margin = v.lhs - 0.5;
    v.separable = v.lhs >= 0.5;
    return v;
}

CrossingReport esd_crossings(const std::function<double(double)>& margin_at, double t_max,
                             int n_points) {
    if (!(t_max > 0.0)) throw DomainError("esd search: t_max must be positive");
    if (n_points < 2) throw DomainError("esd search: need at least two grid points");

    std::vector<double> margins(n_points);
    const double dt = t_max / (n_points - 1);
    for (int i = 0; i < n_points; ++i) margins[i] = margin_at(i * dt);

    CrossingReport report;
    for (int i = 1; i < n_points; ++i) {
        const bool sep_lo = margins[i - 1] >= 0.0;
        const bool sep_hi = margins[i] >= 0.0;
        if (sep_lo == sep_hi) continue;
        double lo = (i - 1) * dt;
        double hi = i * dt;
        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const double m = margin_at(mid);
            if ((m >= 0.0) == sep_hi)
                hi = mid;
            else
                lo = mid;
            const double width = hi - lo;
            if (width <= 1e-9 * std::max(1.0, t_max) && std::abs(m) <= 1e-8) break;
            if (width <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, mid))
                break;  // floating-point resolution floor
        }
        report.crossings.push_back({0.5 * (lo + hi), sep_hi ? +1 : -1});
    }

    if (report.crossings.empty())
        throw NoCrossingError("separability margin never changes sign on the grid");
    for (const Crossing& c : report.crossings)
        if (c.direction > 0) {
            report.esd_time = c.t;
            break;
        }
    return report;
}

}  // namespace qbm
