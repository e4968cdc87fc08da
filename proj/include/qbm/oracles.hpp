#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qbm/params.hpp"

namespace qbm {

// Independent cross-check machinery. Everything here avoids the production
// code paths: kernels are integrated with adaptive Simpson panels and plain
// alternating-series summation, determinants are expanded by brute force and
// the separability test uses the partial-transpose symplectic eigenvalue.

enum class OracleKind { G, Gdot, s, sdot, c, x2, v2 };

// Defining spectral integral of the requested kernel, evaluated to roughly
// 1e-9 relative accuracy.
double oracle_kernel(const PhysicalParams& p, double t, OracleKind kind);

// Cofactor expansion of a 4x4 determinant.
double det4_bruteforce(const Eigen::Matrix4d& M);

struct PptVerdict {
    double nu_minus = 0.0;  // smaller symplectic eigenvalue after partial transpose
    double margin = 0.0;    // nu_minus - 1/2
    bool separable = false;
};

// Partial-transpose separability test from the raw block determinants only.
PptVerdict ppt_simon_oracle(const Eigen::Matrix4d& M);

// Random physical symmetric two-particle weight matrix: canonical blocks
// drawn under the physicality constraint, then conjugated by a random local
// symplectic applied identically to both modes.
Eigen::Matrix4d random_symmetric_state(std::mt19937_64& rng);

// Fault-injection hooks: g_scale multiplies every Green-function value the
// suite reads from the implementation under test, so any value != 1 must
// trip the kernel cross-checks.
struct ReferenceHooks {
    double g_scale = 1.0;
};

struct OracleCheck {
    std::string name;
    bool pass = false;
    double observed = 0.0;  // worst observed deviation / count
    double bound = 0.0;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool all_pass = false;
};

constexpr std::uint64_t kDefaultSeed = 20260814ull;

OracleReport reference_suite(std::uint64_t seed = kDefaultSeed, const ReferenceHooks& hooks = {});

}  // namespace qbm
