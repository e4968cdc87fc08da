#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <string>

#include "qbm/errors.hpp"
#include "qbm/runs.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Exact evolution and separability of a correlated Gaussian particle pair in a passive "
        "heat bath"};
    app.require_subcommand(1);

    qbm::RunConfig cfg;
    std::string method = "poles";

    app.set_config("--config", "", "Read options from a key = value file (# comments allowed)");
    app.allow_config_extras(CLI::config_extras_mode::error);  // unknown keys are named, exit 1
    app.add_option("--b11", cfg.b11, "Dimensionless measurement width b11 (= b22)")
        ->capture_default_str();
    app.add_option("--b12", cfg.b12, "Dimensionless measurement cross width")
        ->capture_default_str();
    app.add_option("--gamma-tau", cfg.gamma_tau, "Bath memory time in units of 1/gamma")
        ->capture_default_str();
    app.add_option("--omega0", cfg.omega0, "Oscillator frequency in units of gamma (0 = free)")
        ->capture_default_str();
    app.add_option("--temperature", cfg.temperature, "Bath temperature kT/(hbar gamma)")
        ->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "Upper end of the gamma t grid")->capture_default_str();
    app.add_option("--n-points", cfg.n_points, "Number of grid points")->capture_default_str();
    app.add_option("--L-scale", cfg.L_scale, "Length unit in units of sqrt(hbar/zeta)")
        ->capture_default_str();
    app.add_option("--method", method, "Kernel evaluation path")
        ->check(CLI::IsMember({"poles", "quadrature"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Output file (default: stdout)");

    CLI::App* evolve =
        app.add_subcommand("evolve", "Emit the trajectory CSV of reduced invariants and Duan lhs");
    evolve->fallthrough();

    CLI::App* esd =
        app.add_subcommand("esd", "Locate the first entangled-to-separable crossing time");
    esd->fallthrough();

    CLI::App* fig1 = app.add_subcommand(
        "fig1", "Duan lhs trajectories for the two built-in configurations A and B");
    fig1->fallthrough();
    fig1->add_option("--svg", cfg.svg_path, "Also write an SVG line chart to this path");

    CLI::App* sweep = app.add_subcommand("sweep", "ESD time as one parameter is swept");
    sweep->fallthrough();
    sweep->add_option("--param", cfg.sweep_param, "Swept parameter")
        ->check(CLI::IsMember({"b11", "b12", "gamma_tau", "temperature"}));
    sweep->add_option("--from", cfg.sweep_from, "First value")->required();
    sweep->add_option("--to", cfg.sweep_to, "Last value")->required();
    sweep->add_option("--steps", cfg.sweep_steps, "Number of sweep points")->required();

    CLI::App* kernels =
        app.add_subcommand("kernels", "Dump the bath kernels on the time grid");
    kernels->fallthrough();

    CLI::App* validate =
        app.add_subcommand("validate", "Run the independent cross-check suite");
    validate->fallthrough();
    validate->add_option("--seed", cfg.seed, "Seed for the randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? qbm::kExitOk : qbm::kExitConfig;
    }

    cfg.method = method == "poles" ? qbm::KernelMethod::analytic_poles
                                   : qbm::KernelMethod::quadrature;

    try {
        if (*evolve) return qbm::run_evolve(cfg);
        if (*esd) return qbm::run_esd(cfg);
        if (*fig1) return qbm::run_fig1(cfg);
        if (*sweep) return qbm::run_sweep(cfg);
        if (*kernels) return qbm::run_kernels(cfg);
        if (*validate) return qbm::run_validate(cfg);
    } catch (const qbm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return qbm::kExitConfig;
    } catch (const qbm::NoCrossingError& e) {
        std::cerr << e.what() << '\n';
        return qbm::kExitNoCrossing;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qbm::kExitNumerical;
    }
    return qbm::kExitConfig;
}
