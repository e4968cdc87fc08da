#pragma once

#include <cstdint>
#include <string>

#include "qbm/kernels.hpp"
#include "qbm/oracles.hpp"
#include "qbm/params.hpp"

namespace qbm {

// Exit codes shared by the command implementations and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitNoCrossing = 3;

struct RunConfig {
    double b11 = 5.0;  // dimensionless measurement widths, a_ij = (zeta/hbar) b_ij
    double b12 = 4.0;
    double gamma_tau = 5.0;  // bath memory in units of 1/gamma
    double omega0 = 0.0;     // oscillator frequency over gamma
    double temperature = 0.0;
    double t_max = 20.0;
    int n_points = 2001;
    double L_scale = 1.0;  // L = L_scale sqrt(hbar/zeta)
    KernelMethod method = KernelMethod::analytic_poles;

    std::string out_path;  // empty: stdout
    std::string svg_path;  // fig1 only

    std::string sweep_param = "b12";
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_steps = 1;

    std::uint64_t seed = kDefaultSeed;  // validate only

    void validate() const;  // throws ConfigError
};

PhysicalParams make_params(const RunConfig& cfg);
WidthMatrix make_widths(const RunConfig& cfg);

int run_evolve(const RunConfig& cfg);
int run_esd(const RunConfig& cfg);
int run_fig1(const RunConfig& cfg);
int run_sweep(const RunConfig& cfg);
int run_kernels(const RunConfig& cfg);
int run_validate(const RunConfig& cfg);

}  // namespace qbm
