#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbm/kernels.hpp"
#include "qbm/trajectory.hpp"

namespace qbm {

// Shortest-round-trip decimal formatting used for every emitted number.
std::string format_number(double v);

void write_evolve_csv(std::ostream& os, const std::vector<TrajectoryPoint>& traj);

// Two separability trajectories on a common time grid.
void write_fig1_csv(std::ostream& os, const std::vector<double>& t, const std::vector<double>& lhs_a,
                    const std::vector<double>& lhs_b);

// Disentanglement time against a swept parameter; nan marks failed points.
void write_sweep_csv(std::ostream& os, const std::vector<double>& param,
                     const std::vector<double>& esd);

// Kernel table plus a trailing velocity-variance line ("v2=<value>" or
// "v2=divergent" when the bath has no high-frequency cutoff).
void write_kernels_csv(std::ostream& os, const std::vector<double>& t,
                       const std::vector<KernelPoint>& pts, const std::optional<double>& v2);

// Self-contained SVG chart of the two separability trajectories with the
// threshold line at 1/2.
std::string fig1_svg(const std::vector<double>& t, const std::vector<double>& lhs_a,
                     const std::vector<double>& lhs_b);

}  // namespace qbm
