#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "qbm/duan.hpp"
#include "qbm/errors.hpp"
#include "qbm/oracles.hpp"
#include "qbm/params.hpp"

using qbm::det4_bruteforce;
using qbm::oracle_kernel;
using qbm::OracleKind;
using qbm::PhysicalParams;
using qbm::ppt_simon_oracle;
using qbm::random_symmetric_state;
using qbm::reference_suite;

namespace {

PhysicalParams bath(double tau, double omega0 = 0.0, double temperature = 0.0) {
    PhysicalParams p;
    p.tau = tau;
    p.omega0 = omega0;
    p.temperature = temperature;
    return p;
}

bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(std::abs(want), 1e-30);
}

}  // namespace

TEST_CASE("oracle integrals hit the frozen references") {
    const PhysicalParams slow = bath(5.0);
    CHECK(rel_close(oracle_kernel(slow, 2.5, OracleKind::G), 2.06513713199121, 5e-9));
    CHECK(rel_close(oracle_kernel(slow, 7.0, OracleKind::Gdot), -0.484278640443123, 5e-9));
    CHECK(rel_close(oracle_kernel(slow, 7.0, OracleKind::s), 3.91764881813087, 5e-9));
    CHECK(rel_close(oracle_kernel(slow, 2.5, OracleKind::sdot), 0.741524413614361, 5e-9));
    CHECK(rel_close(oracle_kernel(slow, 0.0, OracleKind::v2), 0.196479367373363, 5e-9));

    const PhysicalParams fast = bath(0.2);
    CHECK(rel_close(oracle_kernel(fast, 7.0, OracleKind::G), 0.999926340498024, 5e-9));
    CHECK(rel_close(oracle_kernel(fast, 20.0, OracleKind::s), 2.37493625706053, 5e-9));
    CHECK(rel_close(oracle_kernel(fast, 0.5, OracleKind::sdot), 0.444278771141007, 5e-9));
    CHECK(rel_close(oracle_kernel(fast, 0.0, OracleKind::v2), 0.68501710505369, 5e-9));
}

TEST_CASE("oracle integrals honour the t = 0 limits") {
    const PhysicalParams p = bath(5.0);
    CHECK(oracle_kernel(p, 0.0, OracleKind::G) == 0.0);
    CHECK(oracle_kernel(p, 0.0, OracleKind::s) == 0.0);
    CHECK(oracle_kernel(p, 0.0, OracleKind::sdot) == 0.0);
    CHECK(rel_close(oracle_kernel(p, 0.0, OracleKind::Gdot), 1.0, 1e-8));  // sum rule
}

TEST_CASE("oracle integrals reproduce the memoryless bath") {
    const PhysicalParams p = bath(0.0);
    CHECK(rel_close(oracle_kernel(p, 2.0, OracleKind::G), 1.0 - std::exp(-2.0), 1e-8));
    CHECK(rel_close(oracle_kernel(p, 1.0, OracleKind::s), 0.335372508490964, 1e-8));
    CHECK_THROWS_AS(oracle_kernel(p, 0.0, OracleKind::v2), qbm::DivergenceError);
    CHECK_THROWS_AS(oracle_kernel(p, 1.0, OracleKind::c), qbm::DomainError);  // needs omega0
    CHECK_THROWS_AS(oracle_kernel(p, 1.0, OracleKind::x2), qbm::DomainError);
}

TEST_CASE("oracle integrals cover the oscillator and warm baths") {
    const PhysicalParams osc = bath(5.0, 1.0);
    CHECK(rel_close(oracle_kernel(osc, 1.5, OracleKind::c), -0.0128508131501336, 1e-6));
    CHECK(rel_close(oracle_kernel(osc, 0.0, OracleKind::x2), 0.471001138973087, 1e-8));

    const PhysicalParams warm = bath(5.0, 0.0, 1.0);
    CHECK(rel_close(oracle_kernel(warm, 1.0, OracleKind::s), 0.999306272326906, 1e-7));
    CHECK(rel_close(oracle_kernel(warm, 0.0, OracleKind::v2), 1.01623768782457, 1e-7));
}

TEST_CASE("brute-force determinant agrees with LU on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        Eigen::Matrix4d M;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M(i, j) = u(rng);
        const double want = M.determinant();
        CHECK(std::abs(det4_bruteforce(M) - want) <=
              1e-12 * std::max(1.0, std::abs(want)));
    }
    CHECK(det4_bruteforce(Eigen::Matrix4d::Identity()) == 1.0);
}

TEST_CASE("partial-transpose oracle classifies canonical states") {
    Eigen::Matrix4d vac = Eigen::Matrix4d::Identity() * 0.5;
    const auto v = ppt_simon_oracle(vac);
    CHECK(std::abs(v.nu_minus - 0.5) <= 1e-12);
    CHECK(v.separable);

    Eigen::Matrix4d thermal = Eigen::Matrix4d::Identity() * 2.0;
    CHECK(ppt_simon_oracle(thermal).separable);
    CHECK(std::abs(ppt_simon_oracle(thermal).nu_minus - 2.0) <= 1e-12);

    // Two-mode squeezed state: nu_minus = e^{-2r}/2.
    for (double r : {0.3, 0.8}) {
        Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
        const double g = 0.5 * std::cosh(2.0 * r);
        const double c = 0.5 * std::sinh(2.0 * r);
        M(0, 0) = M(1, 1) = M(2, 2) = M(3, 3) = g;
        M(0, 2) = M(2, 0) = c;
        M(1, 3) = M(3, 1) = -c;
        const auto sq = ppt_simon_oracle(M);
        CHECK_FALSE(sq.separable);
        CHECK(std::abs(sq.nu_minus - 0.5 * std::exp(-2.0 * r)) <= 1e-12);
    }
}

TEST_CASE("random states are physical and the two tests agree") {
    std::mt19937_64 rng(qbm::kDefaultSeed);
    int disagreements = 0;
    int skipped = 0;
    for (int k = 0; k < 500; ++k) {
        const Eigen::Matrix4d M = random_symmetric_state(rng);
        const auto inv = qbm::block_invariants(M);
        CHECK(inv.det_g > 0.0);

        const auto duan = qbm::duan_verdict(qbm::reduce(inv));
        const auto ppt = ppt_simon_oracle(M);

        // Identity between the two margins: nu_minus^2 = (g - c)(g + c').
        // Both routes cancel against det-sized terms, so bound the absolute
        // error against that scale rather than the (possibly tiny) product.
        const double scale = std::pow(std::max(1.0, inv.det_g), 2);
        CHECK(std::abs(ppt.nu_minus * ppt.nu_minus - duan.lhs * duan.lhs) <= 1e-8 * scale);

        if (std::min(std::abs(duan.margin), std::abs(ppt.margin)) <= 1e-9) {
            ++skipped;
            continue;
        }
        if (duan.separable != ppt.separable) ++disagreements;
    }
    CHECK(disagreements == 0);
    CHECK(skipped <= 5);  // the draw avoids the boundary by construction
}

TEST_CASE("random state stream is deterministic per seed") {
    std::mt19937_64 a(123), b(123), c(124);
    const Eigen::Matrix4d Ma = random_symmetric_state(a);
    const Eigen::Matrix4d Mb = random_symmetric_state(b);
    const Eigen::Matrix4d Mc = random_symmetric_state(c);
    CHECK((Ma - Mb).cwiseAbs().maxCoeff() == 0.0);
    CHECK((Ma - Mc).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("reference suite passes end to end on the default seed") {
    const auto report = reference_suite();
    for (const auto& chk : report.checks) {
        CAPTURE(chk.name);
        CHECK(chk.pass);
    }
    CHECK(report.all_pass);
    CHECK(report.checks.size() >= 10);
}

TEST_CASE("fault injection trips the kernel cross-checks") {
    qbm::ReferenceHooks hooks;
    hooks.g_scale = 1.01;
    const auto report = reference_suite(qbm::kDefaultSeed, hooks);
    CHECK_FALSE(report.all_pass);

    const auto find = [&](const std::string& name) {
        const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                     [&](const auto& c) { return c.name == name; });
        REQUIRE(it != report.checks.end());
        return *it;
    };
    CHECK_FALSE(find("sum-rule").pass);
    CHECK_FALSE(find("kernel-oracle").pass);
    // Checks that never read a Green function stay green.
    CHECK(find("duan-ppt").pass);
    CHECK(find("squeezed").pass);
}

TEST_CASE("reference suite is reproducible") {
    const auto a = reference_suite(99);
    const auto b = reference_suite(99);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].observed == b.checks[i].observed);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
}
