#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pseudogas/analysis.hpp"
#include "pseudogas/error.hpp"
#include "pseudogas/statmech.hpp"

namespace pg = pseudogas;
using pg::Statistics;

namespace {

const double kTwo52 = std::pow(2.0, 2.5);
const double kTwo32 = std::pow(2.0, 1.5);

}  // namespace

TEST(OccupancyQuadrature, BoltzmannLimit) {
    const double z = 1e-8;
    EXPECT_NEAR(pg::occupancy_ratio_quadrature(z, Statistics::Bose), z, 1e-15);
    EXPECT_NEAR(pg::occupancy_ratio_quadrature(z, Statistics::Fermi), z, 1e-15);
    EXPECT_NEAR(pg::occupancy_ratio_quadrature(z, Statistics::Boltzmann), z, 1e-17);
}

TEST(OccupancyQuadrature, HalfFugacity) {
    // 40-digit references.
    EXPECT_NEAR(pg::occupancy_ratio_quadrature(0.5, Statistics::Bose),
                0.624837020819913853633819312946240879878, 1e-9);
    EXPECT_NEAR(pg::occupancy_ratio_quadrature(0.5, Statistics::Fermi),
                0.4298873215805792677829217858907932221117, 1e-9);
}

TEST(OccupancyQuadrature, AgreesWithSeriesOnGrid) {
    for (double z : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
            EXPECT_NEAR(pg::occupancy_ratio_quadrature(z, s), pg::occupancy_series(1.5, z, s), 1e-9)
                << "z=" << z << " " << pg::to_string(s);
        }
    }
}

TEST(OccupancyQuadrature, HigherOrderAgreesWithSeries) {
    for (double z : {0.05, 0.5, 0.95}) {
        EXPECT_NEAR(pg::occupancy_integral_quadrature(2.5, z, Statistics::Bose),
                    pg::polylog(2.5, z), 1e-10);
        EXPECT_NEAR(pg::occupancy_integral_quadrature(2.5, z, Statistics::Fermi),
                    pg::fermi_polylog(2.5, z), 1e-10);
    }
}

TEST(OccupancyQuadrature, DomainErrors) {
    EXPECT_THROW(pg::occupancy_ratio_quadrature(-0.1, Statistics::Fermi), pg::DomainError);
    EXPECT_THROW(pg::occupancy_ratio_quadrature(0.995, Statistics::Bose), pg::DomainError);
}

TEST(SolveFugacity, EmptyGas) {
    for (Statistics s : {Statistics::Bose, Statistics::Fermi, Statistics::Boltzmann}) {
        EXPECT_EQ(pg::solve_fugacity(0.0, s).z, 0.0);
    }
}

TEST(SolveFugacity, ReferenceValues) {
    // mpmath findroot on Li_{3/2}(z) = 0.1 and -Li_{3/2}(-z) = 0.1.
    EXPECT_NEAR(pg::solve_fugacity(0.1, Statistics::Bose).z,
                0.09652144360689528438123405657832972248247, 1e-14);
    EXPECT_NEAR(pg::solve_fugacity(0.1, Statistics::Fermi).z,
                0.1035936642528053123673715179792078872981, 1e-14);
    EXPECT_EQ(pg::solve_fugacity(0.1, Statistics::Boltzmann).z, 0.1);
}

TEST(SolveFugacity, AgreesWithBisectionOracle) {
    for (double eta : {1e-4, 0.05, 0.3, 1.2}) {
        const long double zb = oracle::bisect(
            [&](long double z) { return oracle::polylog_direct(1.5L, z) - eta; }, 0.0L, 0.99L);
        EXPECT_NEAR(pg::solve_fugacity(eta, Statistics::Bose).z, static_cast<double>(zb),
                    1e-13 * static_cast<double>(zb));
        const long double zf = oracle::bisect(
            [&](long double z) { return -oracle::polylog_direct(1.5L, -z) - eta; }, 0.0L, 0.999L);
        if (eta < 0.7) {
            EXPECT_NEAR(pg::solve_fugacity(eta, Statistics::Fermi).z, static_cast<double>(zf),
                        1e-13 * static_cast<double>(zf));
        }
    }
}

TEST(SolveFugacity, RoundTripRecoversEta) {
    for (double eta = 1e-6; eta <= 0.5; eta *= 1.7) {
        for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
            const double z = pg::solve_fugacity(eta, s).z;
            EXPECT_NEAR(pg::occupancy_series(1.5, z, s, 1e-15) / eta, 1.0, 1e-12)
                << "eta=" << eta << " " << pg::to_string(s);
        }
    }
}

TEST(SolveFugacity, SmallEtaExpansion) {
    for (double eta : {1e-5, 1e-4, 1e-3, 3e-3, 1e-2}) {
        const double bose = pg::solve_fugacity(eta, Statistics::Bose).z;
        const double fermi = pg::solve_fugacity(eta, Statistics::Fermi).z;
        EXPECT_LE(std::fabs(bose - (eta - eta * eta / kTwo32)), 5.0 * eta * eta * eta);
        EXPECT_LE(std::fabs(fermi - (eta + eta * eta / kTwo32)), 5.0 * eta * eta * eta);
    }
}

TEST(SolveFugacity, DegenerateFermiBracketGrowth) {
    const double z = pg::solve_fugacity(5.0, Statistics::Fermi).z;
    EXPECT_GT(z, 1.0);
    EXPECT_NEAR(pg::fermi_polylog(1.5, z), 5.0, 1e-9);
}

TEST(SolveFugacity, Errors) {
    EXPECT_THROW(pg::solve_fugacity(2.4, Statistics::Bose), pg::OutOfSemiclassicalRange);
    EXPECT_THROW(pg::solve_fugacity(-1.0, Statistics::Fermi), pg::DomainError);
    EXPECT_THROW(pg::solve_fugacity(0.1, Statistics::Bose, 1e-16), pg::DomainError);
}

TEST(PressureRatioExact, ClassicalLimit) {
    for (Statistics s : {Statistics::Bose, Statistics::Fermi, Statistics::Boltzmann}) {
        EXPECT_EQ(pg::pressure_ratio_exact(0.0, s), 1.0);
    }
}

TEST(PressureRatioExact, AtSolvedFugacity) {
    // Polylog ratios at the solved fugacity for eta_sp = 1e-3, 40 digits.
    const double zb = pg::solve_fugacity(1e-3, Statistics::Bose).z;
    const double zf = pg::solve_fugacity(1e-3, Statistics::Fermi).z;
    EXPECT_NEAR(pg::pressure_ratio_exact(zb, Statistics::Bose),
                0.999823220004532250333008729782466532099, 1e-14);
    EXPECT_NEAR(pg::pressure_ratio_exact(zf, Statistics::Fermi),
                1.000176773395348102752309963913154580328, 1e-14);
    // First-order law to O(eta^2).
    EXPECT_NEAR(pg::pressure_ratio_exact(zb, Statistics::Bose), 1.0 - 1e-3 / kTwo52, 1e-6);
    EXPECT_NEAR(pg::pressure_ratio_exact(zf, Statistics::Fermi), 1.0 + 1e-3 / kTwo52, 1e-6);
}

TEST(PressureRatioExact, Monotonicity) {
    double prev_bose = 1.0;
    double prev_fermi = 1.0;
    for (double z = 0.01; z <= 0.9 + 1e-12; z += 0.01) {
        const double b = pg::pressure_ratio_exact(z, Statistics::Bose);
        const double f = pg::pressure_ratio_exact(z, Statistics::Fermi);
        EXPECT_LT(b, 1.0);
        EXPECT_GT(f, 1.0);
        EXPECT_LT(b, prev_bose);
        EXPECT_GT(f, prev_fermi);
        prev_bose = b;
        prev_fermi = f;
    }
}

TEST(PressureFirstOrder, ReferenceValues) {
    EXPECT_NEAR(pg::pressure_first_order(0.01, 2, Statistics::Fermi),
                1.000883883476483184405501055452631061299, 1e-15);
    EXPECT_EQ(pg::pressure_first_order(0.0, 1, Statistics::Bose), 1.0);
    EXPECT_NEAR(pg::pressure_first_order(0.01, 1, Statistics::Bose),
                0.9982322330470336311889978890947378774018, 1e-15);
    EXPECT_EQ(pg::pressure_first_order(0.3, 4, Statistics::Boltzmann), 1.0);
}

TEST(PressureExpansion, RemainderIsSecondOrder) {
    const std::vector<double> etas{1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
        std::vector<double> residual;
        for (double eta : etas) {
            const pg::ThermoPoint p = pg::thermo_point(eta, s);
            residual.push_back(std::fabs(p.pressure_ratio_exact - p.pressure_ratio_first_order));
        }
        EXPECT_NEAR(pg::loglog_slope(etas, residual), 2.0, 0.1) << pg::to_string(s);
    }
}
