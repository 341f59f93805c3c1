#pragma once

#include <string_view>

namespace pseudogas {

/// Particle statistics. Sign convention: Fermi contributes "+", Bose "-"
/// to the occupancy denominator and to the first-order pressure shift.
enum class Statistics { Bose, Fermi, Boltzmann };

std::string_view to_string(Statistics s) noexcept;

/// Parses "bose", "fermi" or "boltzmann" (case-insensitive). Throws InvalidInput.
Statistics parse_statistics(std::string_view text);

/// Physical description of a homogeneous ideal gas, SI units.
/// `count` is real-valued: particle numbers are treated as continuous.
struct GasSpec {
    double count = 0.0;         // N
    double volume = 0.0;        // m^3
    double temperature = 0.0;   // K
    double mass = 0.0;          // kg
    int spin_two_s = 0;         // 2 s_A
    Statistics statistics = Statistics::Boltzmann;

    [[nodiscard]] int spin_degeneracy() const noexcept { return spin_two_s + 1; }
};

/// Dimensionless state every downstream computation keys off.
struct ReducedState {
    double eta = 0.0;             // N lambda^3 / V = N / Z0
    double eta_sp = 0.0;          // eta / g_A
    int g_A = 1;
    Statistics statistics = Statistics::Boltzmann;
    double lambda_thermal = 0.0;  // m
    double Z0 = 0.0;              // single-particle partition function, no spin
};

struct PairDegeneracies {
    int g_plus = 0;    // exchange-symmetric spin states of a pair
    int g_minus = 0;   // exchange-antisymmetric
};

/// Thermal de Broglie wavelength h / sqrt(2 pi m kB T).
double thermal_wavelength(double mass, double temperature);

/// Z0(m) = V (2 pi m kB T)^{3/2} / h^3.
double single_particle_partition(double volume, double mass, double temperature);

/// Integer spin pairs with Bose/Boltzmann, half-integer with Fermi/Boltzmann.
bool validate_spin_statistics(int spin_two_s, Statistics statistics) noexcept;

/// Throws NonPositiveInput or SpinStatisticsMismatch.
ReducedState reduced_from_physical(const GasSpec& spec);

/// Splits the g_A^2 pair spin states into symmetric and antisymmetric parts.
PairDegeneracies pair_spin_degeneracies(int g_A);

}  // namespace pseudogas
