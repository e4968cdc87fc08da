#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "qbm/covariance.hpp"
#include "qbm/duan.hpp"
#include "qbm/errors.hpp"
#include "qbm/kernels.hpp"
#include "qbm/params.hpp"

using qbm::assemble_free;
using qbm::ChiPoint;
using qbm::exponent_eval;
using qbm::extract_covariance;
using qbm::initial_covariance;
using qbm::KernelSet;
using qbm::PhysicalParams;
using qbm::WidthMatrix;

namespace {

PhysicalParams bath(double tau, double omega0 = 0.0) {
    PhysicalParams p;
    p.tau = tau;
    p.omega0 = omega0;
    return p;
}

const WidthMatrix kConfigA{5.0, 4.0, 5.0};

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("initial weight matrix matches the closed form") {
    const KernelSet ks = KernelSet::make(bath(5.0));
    const Eigen::Matrix4d M = initial_covariance(ks, kConfigA, 1.0);

    // Position spread a11/(a11^2 - a12^2), momentum spread m^2 <v^2> + a11/4.
    CHECK(std::abs(M(0, 0) - 5.0 / 9.0) <= 1e-12);
    CHECK(std::abs(M(1, 1) - 1.4464793673733634) <= 1e-12);
    CHECK(std::abs(M(0, 2) - (-4.0 / 9.0)) <= 1e-12);
    CHECK(std::abs(M(1, 3) - 1.0) <= 1e-12);

    CHECK(std::abs(M(0, 1)) <= 1e-14);
    CHECK(std::abs(M(0, 3)) <= 1e-14);
    CHECK(std::abs(M(1, 2)) <= 1e-14);

    CHECK(max_abs_diff(M, M.transpose()) <= 1e-14);
    CHECK(max_abs_diff(M.block<2, 2>(0, 0), M.block<2, 2>(2, 2)) <= 1e-14);
}

TEST_CASE("free evolution matches the mid-trajectory reference") {
    const KernelSet ks = KernelSet::make(bath(5.0));
    const Eigen::Matrix4d M = assemble_free(ks, kConfigA, 2.5, 1.0);

    const double want[2][2] = {{6.95019760927344, 1.70991109834564},
                               {1.70991109834564, 0.532874674242805}};
    const double want_c[2][2] = {{3.82034692948443, 1.07131911323077},
                                 {1.07131911323077, 0.269116245495554}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(M(i, j) - want[i][j]) <= 1e-10 * std::abs(want[i][j]));
            CHECK(std::abs(M(i, j + 2) - want_c[i][j]) <= 1e-10 * std::abs(want_c[i][j]));
        }

    const auto rf = qbm::reduce(qbm::block_invariants(M));
    CHECK(std::abs(rf.g - 0.883056239839289) <= 1e-10);
    CHECK(std::abs(rf.c - 0.509376171513628) <= 1e-10);
    CHECK(std::abs(rf.cprime - (-0.234811180634597)) <= 1e-10);
    CHECK(std::abs(qbm::duan_verdict(rf).lhs - 0.492175027825855) <= 1e-10);
}

TEST_CASE("free assembly agrees with its t = 0 specialisation") {
    const KernelSet ks = KernelSet::make(bath(0.2));
    CHECK(max_abs_diff(assemble_free(ks, kConfigA, 0.0, 1.0),
                       initial_covariance(ks, kConfigA, 1.0)) <= 1e-12);
    CHECK(max_abs_diff(assemble_free(ks, kConfigA, 0.0, 0.3),
                       initial_covariance(ks, kConfigA, 0.3)) <= 1e-12);
}

TEST_CASE("polarization extraction reproduces the closed free form") {
    const KernelSet ks = KernelSet::make(bath(5.0));
    for (double t : {0.0, 0.7, 2.5, 9.0}) {
        for (double L : {1.0, 0.5}) {
            CAPTURE(t);
            CAPTURE(L);
            const Eigen::Matrix4d direct = assemble_free(ks, kConfigA, t, L);
            const Eigen::Matrix4d via_exp =
                extract_covariance(exponent_eval(ks, kConfigA, t), L, ks.params().hbar);
            CHECK(max_abs_diff(direct, via_exp) <=
                  1e-10 * std::max(1.0, direct.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("exponent is a negative quadratic vanishing at the origin") {
    const KernelSet ks = KernelSet::make(bath(5.0));
    const auto e = exponent_eval(ks, kConfigA, 1.3);
    CHECK(e(ChiPoint{}) == 0.0);
    const ChiPoint pts[] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0.3, -0.4, 0.2, 0.9}, {2, 1, -1, 1}};
    for (const ChiPoint& p : pts) CHECK(e(p) < 0.0);

    // Swapping the particles is a symmetry of equal widths.
    const ChiPoint ab{0.4, -0.7, 1.1, 0.2};
    const ChiPoint ba{1.1, 0.2, 0.4, -0.7};
    CHECK(std::abs(e(ab) - e(ba)) <= 1e-12 * std::abs(e(ab)));

    // Quadratic scaling: e(2 chi) = 4 e(chi).
    const ChiPoint two{0.8, -1.4, 2.2, 0.4};
    CHECK(std::abs(e(two) - 4.0 * e(ab)) <= 1e-11 * std::abs(e(two)));
}

TEST_CASE("oscillator exponent yields a physical symmetric pair state") {
    const KernelSet ks = KernelSet::make(bath(5.0, 1.0));
    const Eigen::Matrix4d M =
        extract_covariance(exponent_eval(ks, kConfigA, 1.5), 1.0, ks.params().hbar);
    CHECK(max_abs_diff(M, M.transpose()) <= 1e-10);
    const auto inv = qbm::block_invariants(M);
    CHECK(inv.det_g >= 0.25 * (1.0 - 1e-9));  // uncertainty bound per particle
    const auto rf = qbm::reduce(inv);
    CHECK(rf.g > 0.0);
    CHECK(std::abs(rf.cprime) <= std::abs(rf.c) + 1e-12);
}

TEST_CASE("asymmetric widths are valid initially but not a symmetric pair") {
    const KernelSet ks = KernelSet::make(bath(5.0));
    const WidthMatrix skew{5.0, 4.0, 6.0};
    const Eigen::Matrix4d M = initial_covariance(ks, skew, 1.0);
    CHECK(max_abs_diff(M, M.transpose()) <= 1e-12);
    CHECK_THROWS_AS(qbm::block_invariants(M), qbm::StructureError);
}

TEST_CASE("extraction rejects non-quadratic exponents") {
    const auto cubic = [](const ChiPoint& p) {
        const double q = p.P1 * p.P1 + p.Q1 * p.Q1 + p.P2 * p.P2 + p.Q2 * p.Q2;
        return -0.1 * q - 0.01 * p.P1 * p.P1 * p.P1;
    };
    CHECK_THROWS_AS(extract_covariance(cubic, 1.0, 1.0), qbm::NonQuadraticError);

    const auto offset = [](const ChiPoint& p) {
        const double q = p.P1 * p.P1 + p.Q1 * p.Q1 + p.P2 * p.P2 + p.Q2 * p.Q2;
        return -0.1 * q - 0.05;
    };
    CHECK_THROWS_AS(extract_covariance(offset, 1.0, 1.0), qbm::NonQuadraticError);
}

TEST_CASE("length scale only re-weights the dimensionless basis") {
    const KernelSet ks = KernelSet::make(bath(0.2));
    const Eigen::Matrix4d M1 = assemble_free(ks, kConfigA, 1.2, 1.0);
    const Eigen::Matrix4d M2 = assemble_free(ks, kConfigA, 1.2, 2.0);
    // Position-like entries carry 1/L^2, momentum-like L^2, cross entries none.
    CHECK(std::abs(M2(0, 0) - 0.25 * M1(0, 0)) <= 1e-12 * std::abs(M1(0, 0)));
    CHECK(std::abs(M2(1, 1) - 4.0 * M1(1, 1)) <= 1e-12 * std::abs(M1(1, 1)) * 4.0);
    CHECK(std::abs(M2(0, 1) - M1(0, 1)) <= 1e-12 * std::max(1.0, std::abs(M1(0, 1))));
}
