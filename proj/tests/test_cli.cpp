#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/runs.hpp"

using qbm::RunConfig;

namespace {

namespace fs = std::filesystem;

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& stem) {
        path = fs::temp_directory_path() / ("qbm_test_" + stem);
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("evolve writes the documented header and exact first row") {
    TempFile out("evolve.csv");
    RunConfig cfg;
    cfg.n_points = 5;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_evolve(cfg) == qbm::kExitOk);

    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "gamma_t,g,c,cprime,duan_lhs,separable");

    const auto row = split_csv(lines[1]);
    REQUIRE(row.size() == 6);
    CHECK(row[0] == "0");
    CHECK(std::abs(std::stod(row[1]) - 0.896437197209463) <= 1e-12);
    CHECK(std::abs(std::stod(row[2]) - 0.71714975776757) <= 1e-12);
    CHECK(std::abs(std::stod(row[3]) - (-0.619737285874521)) <= 1e-12);
    CHECK(std::abs(std::stod(row[4]) - 0.222730371968082) <= 1e-12);
    CHECK(row[5] == "0");

    // Final grid point is separable for the default configuration.
    const auto last = split_csv(lines[5]);
    CHECK(last[0] == "20");
    CHECK(last[5] == "1");
}

TEST_CASE("evolve supports the oscillator branch") {
    TempFile out("evolve_osc.csv");
    RunConfig cfg;
    cfg.omega0 = 1.0;
    cfg.n_points = 3;
    cfg.t_max = 2.0;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_evolve(cfg) == qbm::kExitOk);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 4);
    CHECK(split_csv(lines[3]).size() == 6);
}

TEST_CASE("esd reports the crossing time at reference accuracy") {
    struct Case {
        double gamma_tau, b11, b12, want;
    };
    const Case cases[] = {
        {5.0, 5.0, 4.0, 2.526821728046},
        {0.2, 5.0, 4.0, 0.648747649317},
    };
    for (const Case& c : cases) {
        CAPTURE(c.gamma_tau);
        TempFile out("esd.txt");
        RunConfig cfg;
        cfg.gamma_tau = c.gamma_tau;
        cfg.b11 = c.b11;
        cfg.b12 = c.b12;
        cfg.out_path = out.str();
        REQUIRE(qbm::run_esd(cfg) == qbm::kExitOk);
        const std::string text = slurp(out.path);
        REQUIRE(text.rfind("esd_gamma_t=", 0) == 0);
        const double got = std::stod(text.substr(12));
        CHECK(std::abs(got - c.want) <= 2e-6);
    }
}

TEST_CASE("esd reports no crossing for an uncorrelated start") {
    TempFile out("esd_none.txt");
    RunConfig cfg;
    cfg.b12 = 0.0;
    cfg.out_path = out.str();
    CHECK(qbm::run_esd(cfg) == qbm::kExitNoCrossing);
    CHECK(slurp(out.path) == "esd=none\n");
}

TEST_CASE("fig1 produces both configurations and is byte-stable") {
    TempFile out1("fig1_a.csv");
    TempFile out2("fig1_b.csv");
    TempFile svg("fig1.svg");

    RunConfig cfg;
    cfg.n_points = 201;
    cfg.out_path = out1.str();
    cfg.svg_path = svg.str();
    REQUIRE(qbm::run_fig1(cfg) == qbm::kExitOk);

    cfg.out_path = out2.str();
    REQUIRE(qbm::run_fig1(cfg) == qbm::kExitOk);

    const std::string text = slurp(out1.path);
    CHECK(text == slurp(out2.path));  // determinism, byte for byte

    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 202);
    CHECK(lines[0] == "gamma_t,duan_lhs_A,duan_lhs_B");

    const auto first = split_csv(lines[1]);
    REQUIRE(first.size() == 3);
    CHECK(std::abs(std::stod(first[1]) - 0.222730371968082) <= 1e-12);
    CHECK(std::abs(std::stod(first[2]) - 0.00668224527760846) <= 1e-9);

    // Both curves start entangled and end separable.
    const auto last = split_csv(lines[201]);
    CHECK(std::stod(first[1]) < 0.5);
    CHECK(std::stod(first[2]) < 0.5);
    CHECK(std::stod(last[1]) > 0.5);
    CHECK(std::stod(last[2]) > 0.5);

    const std::string svg_text = slurp(svg.path);
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("polyline") != std::string::npos);
    CHECK(svg_text.find("stroke-dasharray") != std::string::npos);
    CHECK(svg_text.find("pair A") != std::string::npos);
    CHECK(svg_text.find("pair B") != std::string::npos);
}

TEST_CASE("sweep covers the grid and flags unreachable points") {
    TempFile out("sweep.csv");
    RunConfig cfg;
    cfg.sweep_param = "b12";
    cfg.sweep_from = 3.0;
    cfg.sweep_to = 5.5;
    cfg.sweep_steps = 6;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_sweep(cfg) == qbm::kExitOk);

    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "param,esd_gamma_t");

    // Monotone in the correlation width while physical, nan beyond.
    std::vector<double> esd;
    int nan_count = 0;
    for (int i = 1; i < 7; ++i) {
        const auto row = split_csv(lines[i]);
        REQUIRE(row.size() == 2);
        if (row[1] == "nan") {
            ++nan_count;
            continue;
        }
        esd.push_back(std::stod(row[1]));
    }
    REQUIRE(esd.size() >= 4);
    for (std::size_t i = 1; i < esd.size(); ++i) CHECK(esd[i] > esd[i - 1]);
    CHECK(nan_count == 2);  // b12 = 5.0 and 5.5 are not valid widths
}

TEST_CASE("sweep over bath memory spans both damping regimes") {
    TempFile out("sweep_tau.csv");
    RunConfig cfg;
    cfg.sweep_param = "gamma_tau";
    cfg.sweep_from = 0.2;
    cfg.sweep_to = 5.0;
    cfg.sweep_steps = 3;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_sweep(cfg) == qbm::kExitOk);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 4);
    const auto first = split_csv(lines[1]);
    const auto last = split_csv(lines[3]);
    CHECK(std::abs(std::stod(first[1]) - 0.648747649317) <= 2e-6);
    CHECK(std::abs(std::stod(last[1]) - 2.526821728046) <= 2e-6);
}

TEST_CASE("kernel table carries the velocity-variance trailer") {
    TempFile out("kernels.csv");
    RunConfig cfg;
    cfg.n_points = 5;
    cfg.t_max = 2.0;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_kernels(cfg) == qbm::kExitOk);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "gamma_t,G,Gdot,s,sdot");
    CHECK(lines[6].rfind("v2=", 0) == 0);
    CHECK(std::abs(std::stod(lines[6].substr(3)) - 0.196479367373363) <= 1e-9);

    // Memoryless bath: the trailer records the divergence instead.
    TempFile out2("kernels_ohmic.csv");
    cfg.gamma_tau = 0.0;
    cfg.out_path = out2.str();
    REQUIRE(qbm::run_kernels(cfg) == qbm::kExitOk);
    const auto lines2 = lines_of(slurp(out2.path));
    CHECK(lines2.back() == "v2=divergent");
}

TEST_CASE("validate passes on the default seed") {
    TempFile out("validate.txt");
    RunConfig cfg;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_validate(cfg) == qbm::kExitOk);
    const std::string text = slurp(out.path);
    CHECK(text.find("[FAIL]") == std::string::npos);
    CHECK(text.find("[PASS] sum-rule") != std::string::npos);
    CHECK(text.find("validate: all checks passed") != std::string::npos);
}

TEST_CASE("configuration validation rejects bad inputs") {
    const auto expect_bad = [](void (*mutate)(RunConfig&)) {
        RunConfig cfg;
        mutate(cfg);
        CHECK_THROWS_AS(cfg.validate(), qbm::ConfigError);
    };
    expect_bad([](RunConfig& c) { c.b11 = 0.0; });
    expect_bad([](RunConfig& c) { c.b12 = c.b11; });       // widths must stay positive-definite
    expect_bad([](RunConfig& c) { c.b12 = -c.b11 - 1.0; });
    expect_bad([](RunConfig& c) { c.gamma_tau = -1.0; });
    expect_bad([](RunConfig& c) { c.omega0 = -0.5; });
    expect_bad([](RunConfig& c) { c.temperature = -1.0; });
    expect_bad([](RunConfig& c) { c.t_max = 0.0; });
    expect_bad([](RunConfig& c) { c.n_points = 1; });
    expect_bad([](RunConfig& c) { c.L_scale = 0.0; });
    expect_bad([](RunConfig& c) { c.sweep_steps = 0; });
    expect_bad([](RunConfig& c) { c.sweep_param = "bogus"; });
    expect_bad([](RunConfig& c) { c.t_max = std::nan(""); });

    RunConfig ok;
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("unwritable output paths surface as configuration errors") {
    RunConfig cfg;
    cfg.out_path = "/nonexistent_dir_qbm/out.csv";
    CHECK_THROWS_AS(qbm::run_evolve(cfg), qbm::ConfigError);
}

TEST_CASE("numbers are emitted in round-trippable short form") {
    TempFile out("fmt.csv");
    RunConfig cfg;
    cfg.n_points = 2;
    cfg.t_max = 1.0 / 3.0;
    cfg.out_path = out.str();
    REQUIRE(qbm::run_evolve(cfg) == qbm::kExitOk);
    const auto lines = lines_of(slurp(out.path));
    const auto row = split_csv(lines[2]);
    CHECK(row[0] == "0.333333333333");  // %.12g of 1/3
}
