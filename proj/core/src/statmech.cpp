#include "pseudogas/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "pseudogas/error.hpp"
#include "pseudogas/quadrature.hpp"
#include "pseudogas/roots.hpp"

namespace pseudogas {
namespace {

void check_fugacity(double z, Statistics statistics) {
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw DomainError("fugacity must be finite and >= 0, got " + std::to_string(z));
    }
    if (statistics == Statistics::Bose && z > kBoseFugacityCap) {
        throw DomainError("Bose fugacity " + std::to_string(z) + " exceeds the cap 0.99");
    }
}

// d/dz of the order-s branch: branch_{s-1}(z) / z, tending to 1 at z = 0.
double occupancy_series_derivative(double s, double z, Statistics statistics) {
    if (statistics == Statistics::Boltzmann || z == 0.0) return 1.0;
    if (statistics == Statistics::Bose) return polylog(s - 1.0, z, kMinSeriesTolerance) / z;
    return fermi_polylog(s - 1.0, z, kMinSeriesTolerance) / z;
}

}  // namespace

double occupancy_series(double s, double z, Statistics statistics, double tolerance) {
    if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("fugacity must be >= 0");
    switch (statistics) {
        case Statistics::Bose: return polylog(s, z, tolerance);
        case Statistics::Fermi: return fermi_polylog(s, z, tolerance);
        case Statistics::Boltzmann: return z;
    }
    return z;
}

double occupancy_integral_quadrature(double s, double z, Statistics statistics, double rel_tol) {
    if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("fugacity must be >= 0");
    if (statistics == Statistics::Bose && z >= 1.0) {
        throw DomainError("Bose occupancy integral diverges at z >= 1");
    }
    if (!(s > 0.0)) throw DomainError("occupancy integral order must be positive");
    if (z == 0.0) return 0.0;

    const double sign = statistics == Statistics::Fermi  ? 1.0
                        : statistics == Statistics::Bose ? -1.0
                                                         : 0.0;
    const double power = 2.0 * s - 1.0;
    // 1 / (e^{t^2}/z +- 1) written in terms of q = z e^{-t^2} to stay finite.
    auto integrand = [z, sign, power](double t) {
        const double q = z * std::exp(-t * t);
        const double tp = power == 0.0 ? 1.0 : std::pow(t, power);
        return tp * q / (1.0 + sign * q);
    };
    // Beyond t_max the integrand is below e^{-60} relative to its bulk.
    const double t_max = std::sqrt(std::max(std::log(z), 0.0) + 60.0);
    // Split at the Fermi surface, where the integrand has its knee.
    const double knee = std::sqrt(std::max(std::log(z), 0.0));
    double total = 0.0;
    if (knee > 0.0) {
        total += integrate_adaptive(integrand, 0.0, knee, rel_tol, 0.0, 4000).value;
    }
    total += integrate_adaptive(integrand, knee, t_max, rel_tol, 0.0, 4000).value;
    return 2.0 * total / std::tgamma(s);
}

double occupancy_ratio_quadrature(double z, Statistics statistics, double rel_tol) {
    check_fugacity(z, statistics);
    return occupancy_integral_quadrature(1.5, z, statistics, rel_tol);
}

Fugacity solve_fugacity(double eta_sp, Statistics statistics, double tolerance) {
    if (!(eta_sp >= 0.0) || !std::isfinite(eta_sp)) {
        throw DomainError("eta_sp must be finite and >= 0");
    }
    if (!(tolerance >= kDefaultRootTolerance)) {
        throw DomainError("root tolerance must be >= 1e-14");
    }
    if (eta_sp == 0.0) return {0.0};
    if (statistics == Statistics::Boltzmann) return {eta_sp};

    auto residual = [&](double z) {
        const double f = occupancy_series(1.5, z, statistics, kMinSeriesTolerance) - eta_sp;
        return std::pair{f, occupancy_series_derivative(1.5, z, statistics)};
    };

    double hi = 0.0;
    if (statistics == Statistics::Bose) {
        hi = kBoseFugacityCap;
        if (eta_sp >= polylog(1.5, hi, kMinSeriesTolerance)) {
            throw OutOfSemiclassicalRange("Bose eta_sp = " + std::to_string(eta_sp) +
                                          " needs z > 0.99 (condensation regime)");
        }
    } else {
        hi = 2.0 * eta_sp + 1.0;
        while (residual(hi).first < 0.0) {
            hi *= 2.0;
            if (hi > 1e12) throw NoConvergence("solve_fugacity: Fermi bracket growth failed");
        }
    }

    // Relative target keeps dilute states accurate; absolute cap honours the
    // requested tolerance for dense ones.
    const double target = tolerance * std::min(1.0, eta_sp);
    const RootResult root = safeguarded_newton(residual, 0.0, hi, target);
    if (std::fabs(root.residual) > tolerance) {
        throw NoConvergence("solve_fugacity: residual " + std::to_string(root.residual) +
                            " above tolerance");
    }
    return {root.x};
}

double pressure_ratio_exact(double z, Statistics statistics) {
    check_fugacity(z, statistics);
    if (z == 0.0 || statistics == Statistics::Boltzmann) return 1.0;
    return occupancy_series(2.5, z, statistics, kMinSeriesTolerance) /
           occupancy_series(1.5, z, statistics, kMinSeriesTolerance);
}

double pressure_first_order(double eta, int g_A, Statistics statistics) {
    if (!(eta >= 0.0)) throw DomainError("eta must be >= 0");
    if (g_A < 1) throw DomainError("g_A must be >= 1");
    const double shift = eta / (std::pow(2.0, 2.5) * g_A);
    switch (statistics) {
        case Statistics::Fermi: return 1.0 + shift;
        case Statistics::Bose: return 1.0 - shift;
        case Statistics::Boltzmann: return 1.0;
    }
    return 1.0;
}

ThermoPoint thermo_point(double eta_sp, Statistics statistics) {
    ThermoPoint p;
    p.eta_sp = eta_sp;
    p.fugacity = solve_fugacity(eta_sp, statistics);
    p.pressure_ratio_exact = pressure_ratio_exact(p.fugacity.z, statistics);
    p.pressure_ratio_first_order = pressure_first_order(eta_sp, 1, statistics);
    return p;
}

}  // namespace pseudogas
