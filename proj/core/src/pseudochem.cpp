#include "pseudogas/pseudochem.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "pseudogas/constants.hpp"
#include "pseudogas/error.hpp"
#include "pseudogas/roots.hpp"

namespace pseudogas {
namespace {

constexpr double kTwoToThreeHalves = 2.0 * std::numbers::sqrt2;

void check_eta(double eta) {
    if (!(eta >= 0.0) || !(eta < kSemiclassicalEtaGuard)) {
        throw DomainError("eta = " + std::to_string(eta) +
                          " outside the semi-classical range [0, 0.2)");
    }
}

double polymer_prefactor(double eta, int order) {
    return std::pow(static_cast<double>(order), 1.5) * std::pow(eta, order - 1);
}

double polymer_residual(double x, double prefactor, int order) {
    return x - prefactor * std::pow(1.0 - order * x, order);
}

}  // namespace

PairSpinContext PairSpinContext::make(int g_A, Statistics statistics) {
    const PairDegeneracies d = pair_spin_degeneracies(g_A);
    return {g_A, d.g_plus, d.g_minus, statistics};
}

double MomentumSplit::reduced_energy() const noexcept {
    return beta * delta_p * delta_p / mass;
}

MomentumSplit MomentumSplit::from_reduced_energy(double reduced, double beta, double mass) {
    if (!(reduced >= 0.0) || !(beta > 0.0) || !(mass > 0.0)) {
        throw DomainError("momentum split needs reduced >= 0, beta > 0, mass > 0");
    }
    return {std::sqrt(reduced * mass / beta), beta, mass};
}

double free_energy_ideal(double temperature, double count, double partition) {
    if (!(temperature > 0.0)) throw NonPositiveInput("temperature must be positive");
    if (!(count > 0.0)) throw NonPositiveInput("count must be positive");
    if (!(partition > 0.0)) throw NonPositiveInput("partition function must be positive");
    // ln(Z e / N) = ln(Z / N) + 1
    return -constants::boltzmann_kB * temperature * count * (std::log(partition / count) + 1.0);
}

double total_free_energy_dimer(double x2, const ReducedState& reduced, double temperature,
                               double count, const std::optional<MomentumSplit>& split) {
    if (!(x2 >= 0.0) || !(x2 < 0.5)) {
        throw DomainError("dimer fraction " + std::to_string(x2) + " outside [0, 1/2)");
    }
    const double z_single = reduced.g_A * reduced.Z0;
    const double z0_pair = kTwoToThreeHalves * reduced.Z0;
    const double z_pair =
        split ? pair_partition_spin(PairSpinContext::make(reduced.g_A, reduced.statistics),
                                    *split, z0_pair)
              : static_cast<double>(reduced.g_A) * reduced.g_A * z0_pair;

    const double pairs = count * x2;
    const double monomers = count * (1.0 - 2.0 * x2);
    double f = free_energy_ideal(temperature, monomers, z_single);
    if (pairs > 0.0) f += free_energy_ideal(temperature, pairs, z_pair);
    return f;
}

MixtureState solve_polymer_fraction(double eta, int order) {
    check_eta(eta);
    if (order < 2) throw DomainError("polymer order must be >= 2");
    const double c = polymer_prefactor(eta, order);
    if (c == 0.0) return {order, 0.0, eta, 0.0};

    auto fdf = [c, order](double x) {
        const double base = 1.0 - order * x;
        const double f = x - c * std::pow(base, order);
        const double df = 1.0 + c * order * order * std::pow(base, order - 1);
        return std::pair{f, df};
    };
    const double hi = 1.0 / order - 1e-15;
    const RootResult root = safeguarded_newton(fdf, 0.0, hi, 1e-16 * c);
    const double residual = polymer_residual(root.x, c, order);
    if (std::fabs(residual) > 1e-12) {
        throw NoConvergence("solve_polymer_fraction: residual " + std::to_string(residual));
    }
    return {order, root.x, eta, residual};
}

MixtureState solve_dimer_fraction(double eta) {
    check_eta(eta);
    if (eta == 0.0) return {2, 0.0, 0.0, 0.0};
    const double a = kTwoToThreeHalves * eta;
    // Smaller root of 4a x^2 - (4a + 1) x + a = 0, written without the
    // cancellation of [(4a+1) - sqrt(8a+1)] / (8a).
    const double x = 2.0 * a / (1.0 + 4.0 * a + std::sqrt(1.0 + 8.0 * a));
    const MixtureState check = solve_polymer_fraction(eta, 2);
    if (std::fabs(check.fraction - x) > 1e-10) {
        throw NoConvergence("solve_dimer_fraction: closed form and iteration disagree");
    }
    return {2, x, eta, polymer_residual(x, a, 2)};
}

double eta_from_dimer_fraction(double x2) {
    if (!(x2 >= 0.0) || !(x2 < 0.5)) {
        throw DomainError("dimer fraction " + std::to_string(x2) + " outside [0, 1/2)");
    }
    const double free = 1.0 - 2.0 * x2;
    return x2 / (kTwoToThreeHalves * free * free);
}

double pair_partition_spin(const PairSpinContext& ctx, const MomentumSplit& split,
                           double Z0_2m) {
    double degeneracy = static_cast<double>(ctx.g_A) * ctx.g_A;
    if (split.delta_p == 0.0) {
        if (ctx.statistics == Statistics::Fermi) degeneracy = ctx.g_minus;
        if (ctx.statistics == Statistics::Bose) degeneracy = ctx.g_plus;
    }
    return degeneracy * Z0_2m * std::exp(-split.reduced_energy());
}

double pair_fraction_at_dp(double x2_at_zero_gap, const MomentumSplit& split,
                           const PairSpinContext& ctx) {
    if (!(x2_at_zero_gap >= 0.0) || !(x2_at_zero_gap < 0.5)) {
        throw DomainError("pair fraction outside [0, 1/2)");
    }
    if (split.delta_p != 0.0) return x2_at_zero_gap * std::exp(-split.reduced_energy());
    const double all = static_cast<double>(ctx.g_A) * ctx.g_A;
    switch (ctx.statistics) {
        case Statistics::Fermi: return ctx.g_minus / all * x2_at_zero_gap;
        case Statistics::Bose: return ctx.g_plus / all * x2_at_zero_gap;
        case Statistics::Boltzmann: return x2_at_zero_gap;
    }
    return x2_at_zero_gap;
}

double continuum_criterion(long J, double box_L, double mass, double temperature) {
    if (J < 1) throw NonPositiveInput("J must be a natural number");
    if (!(box_L > 0.0) || !(mass > 0.0) || !(temperature > 0.0)) {
        throw NonPositiveInput("box length, mass and temperature must be positive");
    }
    const double p = static_cast<double>(J) * constants::hbar;
    return p * p / (mass * box_L * box_L * constants::boltzmann_kB * temperature);
}

bool within_continuum(double criterion_value, double threshold) noexcept {
    return criterion_value < threshold;
}

}  // namespace pseudogas
