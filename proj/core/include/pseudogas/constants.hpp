#pragma once

#include <numbers>

namespace pseudogas::constants {

// Exact SI values (2019 redefinition).
inline constexpr double planck_h = 6.62607015e-34;       // J s
inline constexpr double boltzmann_kB = 1.380649e-23;     // J / K
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi);

}  // namespace pseudogas::constants
