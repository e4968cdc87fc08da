#include "qbm/trajectory.hpp"

#include "qbm/errors.hpp"

namespace qbm {

Eigen::Matrix4d pair_state(const KernelSet& ks, const WidthMatrix& a, double t, double L) {
    if (ks.params().omega0 == 0.0) return assemble_free(ks, a, t, L);
    return extract_covariance(exponent_eval(ks, a, t), L, ks.params().hbar);
}

std::vector<TrajectoryPoint> evolve_trajectory(const KernelSet& ks, const WidthMatrix& a,
                                               double t_max, int n_points, double L) {
    if (!(t_max > 0.0)) throw DomainError("trajectory requires t_max > 0");
    if (n_points < 2) throw DomainError("trajectory requires at least two grid points");
    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        TrajectoryPoint pt;
        pt.t = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        pt.M = pair_state(ks, a, pt.t, L);
        pt.rf = reduce(block_invariants(pt.M));
        pt.verdict = duan_verdict(pt.rf);
        out.push_back(pt);
    }
    return out;
}

std::function<double(double)> margin_function(const KernelSet& ks, const WidthMatrix& a,
                                              double L) {
    return [ks, a, L](double t) {
        return duan_verdict(reduce(block_invariants(pair_state(ks, a, t, L)))).margin;
    };
}

}  // namespace qbm
