#pragma once

#include "pseudogas/core_model.hpp"
#include "pseudogas/polylog.hpp"

namespace pseudogas {

/// Largest Bose fugacity the solvers accept; everything above is treated as
/// the onset of condensation and rejected.
inline constexpr double kBoseFugacityCap = 0.99;
inline constexpr double kDefaultQuadratureTolerance = 1e-10;
inline constexpr double kDefaultRootTolerance = 1e-14;

/// z = exp(beta mu).
struct Fugacity {
    double z = 0.0;
};

/// One evaluated point of the equation of state.
struct ThermoPoint {
    double eta_sp = 0.0;
    Fugacity fugacity;
    double pressure_ratio_exact = 1.0;        // P V / (N kB T)
    double pressure_ratio_first_order = 1.0;  // 1 -/+ eta_sp / 2^{5/2}
};

/// Series value of the occupancy integral of order `s` at fugacity `z`:
/// Bose Li_s(z), Fermi -Li_s(-z), Boltzmann z.
double occupancy_series(double s, double z, Statistics statistics,
                        double tolerance = kDefaultSeriesTolerance);

/// (1/Gamma(s)) * int_0^inf u^{s-1} / (e^u / z +- 1) du by adaptive quadrature,
/// after substituting u = t^2 to remove the endpoint singularity. Normalised so
/// that the z -> 0 limit is z for every order.
double occupancy_integral_quadrature(double s, double z, Statistics statistics,
                                     double rel_tol = kDefaultQuadratureTolerance);

/// The number-equation integral (order 3/2) evaluated by quadrature. Equals
/// N lambda^3 / (g_A V) at the given fugacity.
double occupancy_ratio_quadrature(double z, Statistics statistics,
                                  double rel_tol = kDefaultQuadratureTolerance);

/// Inverts the number equation for the fugacity. Bose solutions are confined
/// to [0, 0.99]; Fermi brackets grow geometrically from [0, 2 eta_sp + 1].
/// Throws OutOfSemiclassicalRange, DomainError or NoConvergence.
Fugacity solve_fugacity(double eta_sp, Statistics statistics,
                        double tolerance = kDefaultRootTolerance);

/// P V / (N kB T) as the ratio of the order-5/2 and order-3/2 branches.
double pressure_ratio_exact(double z, Statistics statistics);

/// 1 + eta / (2^{5/2} g_A) for Fermi, minus for Bose, exactly 1 for Boltzmann.
double pressure_first_order(double eta, int g_A, Statistics statistics);

/// Solves for z and evaluates both pressure ratios at a given eta_sp.
ThermoPoint thermo_point(double eta_sp, Statistics statistics);

}  // namespace pseudogas
