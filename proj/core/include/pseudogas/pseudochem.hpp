#pragma once

#include <optional>

#include "pseudogas/core_model.hpp"

namespace pseudogas {

/// Largest eta accepted by the mixture solvers.
inline constexpr double kSemiclassicalEtaGuard = 0.2;
/// Default smallness threshold for the continuous-spectrum criterion.
inline constexpr double kContinuumThreshold = 1e-3;

/// Equilibrium composition of a two-species mixture of monomers A and
/// pseudo-polymers A_j (j particles sharing one momentum).
struct MixtureState {
    int order = 2;          // j
    double fraction = 0.0;  // x_j = N_j / N, in [0, 1/j)
    double eta = 0.0;
    double residual = 0.0;  // x - j^{3/2} eta^{j-1} (1 - j x)^j
};

struct PairSpinContext {
    int g_A = 1;
    int g_plus = 1;
    int g_minus = 0;
    Statistics statistics = Statistics::Bose;

    /// Builds the context from g_A using pair_spin_degeneracies.
    static PairSpinContext make(int g_A, Statistics statistics);
};

/// Relative momentum of a pair: the two particles carry p +- delta_p.
struct MomentumSplit {
    double delta_p = 0.0;  // kg m / s, >= 0
    double beta = 0.0;     // 1 / J
    double mass = 0.0;     // kg

    /// beta delta_p^2 / m, the internal energy of the pair in units of kB T.
    [[nodiscard]] double reduced_energy() const noexcept;

    /// Split whose reduced energy equals `reduced` at the given beta and mass.
    static MomentumSplit from_reduced_energy(double reduced, double beta, double mass);
};

/// -kB T count ln(Z e / count). Throws NonPositiveInput.
double free_energy_ideal(double temperature, double count, double partition);

/// Free energy of N particles of which N x2 are bound in pseudo-dimers.
/// Monomers carry Z_A = g_A Z0(m); pairs carry g_A^2 Z0(2m) unless a split is
/// given, in which case the pair partition function of that split is used.
/// A species with zero count contributes nothing. Throws DomainError for x2
/// outside [0, 1/2).
double total_free_energy_dimer(double x2, const ReducedState& reduced, double temperature,
                               double count, const std::optional<MomentumSplit>& split = {});

/// Equilibrium pseudo-dimer fraction: root of x = 2^{3/2} eta (1 - 2x)^2,
/// from the closed-form quadratic root, cross-checked against the bracketed
/// solver.
MixtureState solve_dimer_fraction(double eta);

/// Equilibrium pseudo-polymer fraction: root of x = j^{3/2} eta^{j-1} (1 - jx)^j
/// on [0, 1/j).
MixtureState solve_polymer_fraction(double eta, int order);

/// Exact inverse of the dimer equilibrium: eta = x2 / (2^{3/2} (1 - 2 x2)^2).
double eta_from_dimer_fraction(double x2);

/// Z_{A_2} = g Z0(2m) e^{-beta delta_p^2 / m}, with g = g_A^2 for split pairs and
/// g_minus (Fermi) or g_plus (Bose) when delta_p is exactly zero.
double pair_partition_spin(const PairSpinContext& ctx, const MomentumSplit& split,
                           double Z0_2m);

/// N_2(delta_p) / N given the zero-gap pair fraction.
double pair_fraction_at_dp(double x2_at_zero_gap, const MomentumSplit& split,
                           const PairSpinContext& ctx);

/// (J hbar)^2 / (m L^2 kB T): reduced pair energy for momenta J hbar / L apart.
double continuum_criterion(long J, double box_L, double mass, double temperature);

/// True when the criterion value is below `threshold`.
bool within_continuum(double criterion_value, double threshold = kContinuumThreshold) noexcept;

}  // namespace pseudogas
