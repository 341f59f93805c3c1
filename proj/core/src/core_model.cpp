#include "pseudogas/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "pseudogas/constants.hpp"
#include "pseudogas/error.hpp"

namespace pseudogas {
namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw NonPositiveInput(std::string(name) + " must be positive and finite, got " +
                               std::to_string(value));
    }
}

}  // namespace

std::string_view to_string(Statistics s) noexcept {
    switch (s) {
        case Statistics::Bose: return "bose";
        case Statistics::Fermi: return "fermi";
        case Statistics::Boltzmann: return "boltzmann";
    }
    return "unknown";
}

Statistics parse_statistics(std::string_view text) {
    std::string lower(text);
    std::ranges::transform(lower, lower.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "bose") return Statistics::Bose;
    if (lower == "fermi") return Statistics::Fermi;
    if (lower == "boltzmann") return Statistics::Boltzmann;
    throw InvalidInput("unknown statistics '" + std::string(text) +
                       "' (expected bose, fermi or boltzmann)");
}

double thermal_wavelength(double mass, double temperature) {
    require_positive(mass, "mass");
    require_positive(temperature, "temperature");
    return constants::planck_h /
           std::sqrt(2.0 * std::numbers::pi * mass * constants::boltzmann_kB * temperature);
}

double single_particle_partition(double volume, double mass, double temperature) {
    require_positive(volume, "volume");
    const double lambda = thermal_wavelength(mass, temperature);
    return volume / (lambda * lambda * lambda);
}

bool validate_spin_statistics(int spin_two_s, Statistics statistics) noexcept {
    if (spin_two_s < 0) return false;
    switch (statistics) {
        case Statistics::Boltzmann: return true;
        case Statistics::Bose: return spin_two_s % 2 == 0;
        case Statistics::Fermi: return spin_two_s % 2 == 1;
    }
    return false;
}

ReducedState reduced_from_physical(const GasSpec& spec) {
    require_positive(spec.count, "particle count");
    require_positive(spec.volume, "volume");
    require_positive(spec.temperature, "temperature");
    require_positive(spec.mass, "mass");
    if (spec.spin_two_s < 0) {
        throw InvalidInput("spin_two_s must be >= 0");
    }
    if (!validate_spin_statistics(spec.spin_two_s, spec.statistics)) {
        throw SpinStatisticsMismatch("2s = " + std::to_string(spec.spin_two_s) +
                                     " is incompatible with " +
                                     std::string(to_string(spec.statistics)) + " statistics");
    }

    ReducedState out;
    out.lambda_thermal = thermal_wavelength(spec.mass, spec.temperature);
    out.Z0 = single_particle_partition(spec.volume, spec.mass, spec.temperature);
    out.eta = spec.count / out.Z0;
    out.g_A = spec.spin_degeneracy();
    out.eta_sp = out.eta / out.g_A;
    out.statistics = spec.statistics;
    return out;
}

PairDegeneracies pair_spin_degeneracies(int g_A) {
    if (g_A < 1) throw InvalidInput("g_A must be >= 1");
    return {g_A * (g_A + 1) / 2, g_A * (g_A - 1) / 2};
}

}  // namespace pseudogas
