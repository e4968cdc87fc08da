#include "qbm/runs.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <vector>

#include "qbm/duan.hpp"
#include "qbm/emit.hpp"
#include "qbm/errors.hpp"
#include "qbm/trajectory.hpp"

namespace qbm {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

// Routes output to the configured file or stdout.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file: " + path);
    fn(os);
    if (!os) throw ConfigError("write failed: " + path);
}

double pair_length(const RunConfig& cfg, const PhysicalParams& p) {
    return cfg.L_scale * std::sqrt(p.hbar / p.zeta);
}

std::vector<double> time_grid(double t_max, int n_points) {
    std::vector<double> t(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        t[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / (n_points - 1);
    return t;
}

}  // namespace

void RunConfig::validate() const {
    require(std::isfinite(b11) && b11 > 0.0, "b11 must be positive");
    require(std::isfinite(b12), "b12 must be finite");
    require(b11 * b11 - b12 * b12 > 0.0, "measurement widths must satisfy b11^2 > b12^2");
    require(std::isfinite(gamma_tau) && gamma_tau >= 0.0, "gamma_tau must be >= 0");
    require(std::isfinite(omega0) && omega0 >= 0.0, "omega0 must be >= 0");
    require(std::isfinite(temperature) && temperature >= 0.0, "temperature must be >= 0");
    require(std::isfinite(t_max) && t_max > 0.0, "t_max must be positive");
    require(n_points >= 2, "n_points must be at least 2");
    require(n_points <= 10'000'000, "n_points too large");
    require(std::isfinite(L_scale) && L_scale > 0.0, "L_scale must be positive");
    require(sweep_steps >= 1, "sweep steps must be at least 1");
    require(sweep_param == "b11" || sweep_param == "b12" || sweep_param == "gamma_tau" ||
                sweep_param == "temperature",
            "sweep param must be one of b11, b12, gamma_tau, temperature");
    require(std::isfinite(sweep_from) && std::isfinite(sweep_to), "sweep range must be finite");
}

PhysicalParams make_params(const RunConfig& cfg) {
    PhysicalParams p;  // natural units m = zeta = hbar = 1, so gamma = 1
    p.tau = cfg.gamma_tau;
    p.omega0 = cfg.omega0;
    p.temperature = cfg.temperature;
    return p;
}

WidthMatrix make_widths(const RunConfig& cfg) {
    WidthMatrix a;  // a_ij = (zeta/hbar) b_ij, numerically equal in natural units
    a.a11 = cfg.b11;
    a.a12 = cfg.b12;
    a.a22 = cfg.b11;
    return a;
}

int run_evolve(const RunConfig& cfg) {
    cfg.validate();
    const PhysicalParams p = make_params(cfg);
    const KernelSet ks = KernelSet::make(p, cfg.method);
    const auto traj = evolve_trajectory(ks, make_widths(cfg), cfg.t_max, cfg.n_points,
                                        pair_length(cfg, p));
    with_output(cfg.out_path, [&](std::ostream& os) { write_evolve_csv(os, traj); });
    return kExitOk;
}

int run_esd(const RunConfig& cfg) {
    cfg.validate();
    const PhysicalParams p = make_params(cfg);
    const KernelSet ks = KernelSet::make(p, cfg.method);
    const auto margin = margin_function(ks, make_widths(cfg), pair_length(cfg, p));
    std::optional<double> esd;
    try {
        esd = esd_crossings(margin, cfg.t_max, cfg.n_points).esd_time;
    } catch (const NoCrossingError&) {
        esd.reset();
    }
    return [&] {
        int code = kExitOk;
        with_output(cfg.out_path, [&](std::ostream& os) {
            if (esd) {
                os << "esd_gamma_t=" << format_number(*esd) << '\n';
            } else {
                os << "esd=none\n";
                code = kExitNoCrossing;
            }
        });
        return code;
    }();
}

int run_fig1(const RunConfig& cfg) {
    cfg.validate();
    const PhysicalParams p = make_params(cfg);
    const KernelSet ks = KernelSet::make(p, cfg.method);
    const double L = pair_length(cfg, p);

    RunConfig cfg_b = cfg;
    cfg_b.b11 = 5000.0;
    cfg_b.b12 = 4999.0;

    const auto t = time_grid(cfg.t_max, cfg.n_points);
    const auto traj_a = evolve_trajectory(ks, make_widths(cfg), cfg.t_max, cfg.n_points, L);
    const auto traj_b = evolve_trajectory(ks, make_widths(cfg_b), cfg.t_max, cfg.n_points, L);
    std::vector<double> lhs_a(t.size()), lhs_b(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        lhs_a[i] = traj_a[i].verdict.lhs;
        lhs_b[i] = traj_b[i].verdict.lhs;
    }

    with_output(cfg.out_path, [&](std::ostream& os) { write_fig1_csv(os, t, lhs_a, lhs_b); });
    if (!cfg.svg_path.empty())
        with_output(cfg.svg_path, [&](std::ostream& os) { os << fig1_svg(t, lhs_a, lhs_b); });
    return kExitOk;
}

int run_sweep(const RunConfig& cfg) {
    cfg.validate();
    std::vector<double> values(static_cast<std::size_t>(cfg.sweep_steps));
    for (int i = 0; i < cfg.sweep_steps; ++i)
        values[static_cast<std::size_t>(i)] =
            cfg.sweep_steps == 1
                ? cfg.sweep_from
                : cfg.sweep_from + (cfg.sweep_to - cfg.sweep_from) * i / (cfg.sweep_steps - 1);

    std::vector<double> esd(values.size());
    int succeeded = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        RunConfig point = cfg;
        if (cfg.sweep_param == "b11")
            point.b11 = values[i];
        else if (cfg.sweep_param == "b12")
            point.b12 = values[i];
        else if (cfg.sweep_param == "gamma_tau")
            point.gamma_tau = values[i];
        else
            point.temperature = values[i];
        try {
            point.validate();
            const PhysicalParams p = make_params(point);
            const KernelSet ks = KernelSet::make(p, point.method);
            const auto margin = margin_function(ks, make_widths(point), pair_length(point, p));
            const auto report = esd_crossings(margin, point.t_max, point.n_points);
            esd[i] = report.esd_time ? *report.esd_time : std::nan("");
            ++succeeded;
        } catch (const NoCrossingError&) {
            esd[i] = std::nan("");
            ++succeeded;  // evaluated cleanly; absence of a crossing is a result
        } catch (const std::exception& ex) {
            esd[i] = std::nan("");
            std::cerr << "warning: sweep point " << format_number(values[i]) << " failed: "
                      << ex.what() << '\n';
        }
    }
    with_output(cfg.out_path, [&](std::ostream& os) { write_sweep_csv(os, values, esd); });
    return succeeded > 0 ? kExitOk : kExitNumerical;
}

int run_kernels(const RunConfig& cfg) {
    cfg.validate();
    const PhysicalParams p = make_params(cfg);
    const KernelSet ks = KernelSet::make(p, cfg.method);
    const auto t = time_grid(cfg.t_max, cfg.n_points);
    std::vector<KernelPoint> pts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) pts[i] = ks.eval(t[i]);
    std::optional<double> v2;
    try {
        v2 = ks.velocity_variance();
    } catch (const DivergenceError&) {
        v2.reset();
    }
    with_output(cfg.out_path, [&](std::ostream& os) { write_kernels_csv(os, t, pts, v2); });
    return kExitOk;
}

int run_validate(const RunConfig& cfg) {
    const OracleReport report = reference_suite(cfg.seed);
    int code = kExitOk;
    with_output(cfg.out_path, [&](std::ostream& os) {
        for (const OracleCheck& c : report.checks)
            os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
               << " observed=" << format_number(c.observed) << " bound=" << format_number(c.bound)
               << '\n';
        os << (report.all_pass ? "validate: all checks passed\n"
                               : "validate: at least one check failed\n");
        if (!report.all_pass) code = kExitNumerical;
    });
    return code;
}

}  // namespace qbm
