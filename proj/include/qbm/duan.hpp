#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

namespace qbm {

// Determinant invariants of the two-particle block matrix M = [[G, C], [C, G]].
struct BlockInvariants {
    double det_g = 0.0;  // det G
    double det_c = 0.0;  // det C
    double det_m = 0.0;  // det M, evaluated as det(G+C) det(G-C)
};

// Validates the block structure (symmetric M, equal diagonal blocks,
// symmetric cross block) and collects the invariants. StructureError if the
// matrix is not of the assumed form.
BlockInvariants block_invariants(const Eigen::Matrix4d& M);

// The rotation/squeeze canonical form: G = diag(g, g), C = diag(c, c') with
// |c| >= |c'|, recovered from the invariants alone.
struct ReducedForm {
    double g = 0.0;
    double c = 0.0;
    double cprime = 0.0;
};

ReducedForm reduce(const BlockInvariants& inv);

struct DuanVerdict {
    double lhs = 0.0;     // sqrt((g - c)(g + c'))
    double margin = 0.0;  // lhs - 1/2
    bool separable = false;
};

DuanVerdict duan_verdict(const ReducedForm& rf);

struct Crossing {
    double t = 0.0;
    int direction = 0;  // +1: entangled -> separable, -1: the reverse
};

struct CrossingReport {
    std::vector<Crossing> crossings;
    std::optional<double> esd_time;  // first entangled -> separable crossing
};

// Scans margin_at on a uniform grid over [0, t_max] and refines each sign
// change by bisection. Throws NoCrossingError if the margin never changes
// sign on the grid.
CrossingReport esd_crossings(const std::function<double(double)>& margin_at, double t_max,
                             int n_points);

}  // namespace qbm
