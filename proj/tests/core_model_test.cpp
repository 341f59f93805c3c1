#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pseudogas/constants.hpp"
#include "pseudogas/core_model.hpp"
#include "pseudogas/error.hpp"

namespace pg = pseudogas;
using pg::Statistics;

namespace {

constexpr double kHeliumMass = 6.6465e-27;

pg::GasSpec helium(double count = 2.6868e25, double volume = 1.0, double temperature = 300.0) {
    return {count, volume, temperature, kHeliumMass, 0, Statistics::Bose};
}

}  // namespace

TEST(Constants, ExactSiValues) {
    EXPECT_EQ(pg::constants::planck_h, 6.62607015e-34);
    EXPECT_EQ(pg::constants::boltzmann_kB, 1.380649e-23);
    EXPECT_DOUBLE_EQ(pg::constants::hbar, 6.62607015e-34 / (2.0 * std::numbers::pi));
}

TEST(ReducedFromPhysical, EtaIsOneWhenVolumeEqualsNLambdaCubed) {
    const double lambda = pg::thermal_wavelength(kHeliumMass, 300.0);
    const double count = 1e20;
    pg::GasSpec spec = helium(count, count * lambda * lambda * lambda);
    const pg::ReducedState r = pg::reduced_from_physical(spec);
    EXPECT_NEAR(r.eta, 1.0, 1e-14);
}

TEST(ReducedFromPhysical, HeliumAtRoomTemperature) {
    // 3.43587460607926913700788e-6 from a 40-digit evaluation of N h^3 / (V (2 pi m kB T)^{3/2}).
    const pg::ReducedState r = pg::reduced_from_physical(helium());
    EXPECT_NEAR(r.eta, 3.43587460607926913700788e-6, 3.4e-8);  // +-1%
    EXPECT_NEAR(r.eta / 3.43587460607926913700788e-6, 1.0, 1e-12);
    EXPECT_NEAR(r.lambda_thermal / 5.038106247646977937842e-11, 1.0, 1e-13);
    EXPECT_EQ(r.g_A, 1);
    EXPECT_EQ(r.statistics, Statistics::Bose);
}

TEST(ReducedFromPhysical, EtaSpDividesBySpinDegeneracy) {
    const double lambda = pg::thermal_wavelength(kHeliumMass, 300.0);
    pg::GasSpec spec{0.02, lambda * lambda * lambda, 300.0, kHeliumMass, 1, Statistics::Fermi};
    const pg::ReducedState r = pg::reduced_from_physical(spec);
    EXPECT_EQ(r.g_A, 2);
    EXPECT_NEAR(r.eta, 0.02, 1e-16);
    EXPECT_NEAR(r.eta_sp, 0.01, 1e-16);
}

TEST(ReducedFromPhysical, EtaEqualsCountOverZ0) {
    for (double T : {1e-3, 1.0, 300.0, 1e6}) {
        for (double V : {1e-20, 1.0, 1e9}) {
            const pg::ReducedState r = pg::reduced_from_physical(helium(1e10, V, T));
            EXPECT_NEAR(r.eta / (1e10 / r.Z0), 1.0, 1e-14);
        }
    }
}

TEST(ReducedFromPhysical, ScalingLaws) {
    const pg::ReducedState base = pg::reduced_from_physical(helium(1e22, 2.0, 50.0));
    const pg::ReducedState doubled_v = pg::reduced_from_physical(helium(1e22, 4.0, 50.0));
    const pg::ReducedState hotter = pg::reduced_from_physical(helium(1e22, 2.0, 200.0));
    EXPECT_NEAR(doubled_v.eta / base.eta, 0.5, 1e-14);
    EXPECT_NEAR(hotter.eta / base.eta, 1.0 / 8.0, 1e-14);
}

TEST(ReducedFromPhysical, RejectsNonPositiveInputs) {
    EXPECT_THROW(pg::reduced_from_physical(helium(0.0)), pg::NonPositiveInput);
    EXPECT_THROW(pg::reduced_from_physical(helium(1.0, -1.0)), pg::NonPositiveInput);
    EXPECT_THROW(pg::reduced_from_physical(helium(1.0, 1.0, 0.0)), pg::NonPositiveInput);
    pg::GasSpec massless = helium();
    massless.mass = 0.0;
    EXPECT_THROW(pg::reduced_from_physical(massless), pg::NonPositiveInput);
    pg::GasSpec nan_count = helium(std::nan(""));
    EXPECT_THROW(pg::reduced_from_physical(nan_count), pg::NonPositiveInput);
}

TEST(ReducedFromPhysical, RejectsSpinStatisticsMismatch) {
    pg::GasSpec spec = helium();
    spec.spin_two_s = 1;
    spec.statistics = Statistics::Bose;
    EXPECT_THROW(pg::reduced_from_physical(spec), pg::SpinStatisticsMismatch);
    spec.spin_two_s = 2;
    spec.statistics = Statistics::Fermi;
    EXPECT_THROW(pg::reduced_from_physical(spec), pg::SpinStatisticsMismatch);
}

TEST(ValidateSpinStatistics, ParityRule) {
    EXPECT_TRUE(pg::validate_spin_statistics(0, Statistics::Bose));
    EXPECT_FALSE(pg::validate_spin_statistics(1, Statistics::Bose));
    EXPECT_TRUE(pg::validate_spin_statistics(1, Statistics::Fermi));
    EXPECT_FALSE(pg::validate_spin_statistics(0, Statistics::Fermi));
    EXPECT_TRUE(pg::validate_spin_statistics(2, Statistics::Bose));
    EXPECT_TRUE(pg::validate_spin_statistics(3, Statistics::Fermi));
    for (int two_s = 0; two_s < 10; ++two_s) {
        EXPECT_TRUE(pg::validate_spin_statistics(two_s, Statistics::Boltzmann));
    }
    EXPECT_FALSE(pg::validate_spin_statistics(-1, Statistics::Boltzmann));
}

TEST(PairSpinDegeneracies, SmallCases) {
    EXPECT_EQ(pg::pair_spin_degeneracies(1).g_plus, 1);
    EXPECT_EQ(pg::pair_spin_degeneracies(1).g_minus, 0);
    EXPECT_EQ(pg::pair_spin_degeneracies(2).g_plus, 3);
    EXPECT_EQ(pg::pair_spin_degeneracies(2).g_minus, 1);
    EXPECT_EQ(pg::pair_spin_degeneracies(3).g_plus, 6);
    EXPECT_EQ(pg::pair_spin_degeneracies(3).g_minus, 3);
    EXPECT_THROW(pg::pair_spin_degeneracies(0), pg::InvalidInput);
}

TEST(PairSpinDegeneracies, MatchExchangeEnumeration) {
    for (int g = 1; g <= 64; ++g) {
        const auto d = pg::pair_spin_degeneracies(g);
        const auto [sym, anti] = oracle::pair_spin_split_by_enumeration(g);
        EXPECT_EQ(d.g_plus, sym) << "g_A = " << g;
        EXPECT_EQ(d.g_minus, anti) << "g_A = " << g;
        EXPECT_EQ(d.g_plus + d.g_minus, g * g);
    }
}

TEST(Statistics, ParseAndPrint) {
    EXPECT_EQ(pg::parse_statistics("Bose"), Statistics::Bose);
    EXPECT_EQ(pg::parse_statistics("FERMI"), Statistics::Fermi);
    EXPECT_EQ(pg::to_string(Statistics::Boltzmann), "boltzmann");
    EXPECT_THROW(pg::parse_statistics("anyon"), pg::InvalidInput);
}
