#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "pseudogas/core_model.hpp"

namespace pseudogas {

inline constexpr int kMaxLatticeNMax = 20;
inline constexpr int kMaxCanonicalN = 12;
inline constexpr double kEnumerationBudget = 5e6;
inline constexpr long kMinSampleTrials = 100;

/// Momentum quantisation in a periodic cube: p = (hbar / L) n or (h / L) n.
enum class Quantization { HbarOverL, HOverL };

std::string_view to_string(Quantization q) noexcept;
Quantization parse_quantization(std::string_view text);

/// All modes n in [-n_max, n_max]^3 of a cubic box, energies sorted ascending.
struct ModeLattice {
    double box_L = 0.0;
    double mass = 0.0;
    double beta = 0.0;
    int n_max = 0;
    Quantization convention = Quantization::HOverL;
    std::vector<double> energies;  // J, eps = p^2 / 2m

    [[nodiscard]] std::size_t mode_count() const noexcept { return energies.size(); }

    /// z1(k beta) = sum over modes of exp(-k beta eps).
    [[nodiscard]] double single_particle_sum(int k = 1) const;

    /// exp(-k beta eps) per mode, in energy order.
    [[nodiscard]] std::vector<double> weights(int k = 1) const;

    /// Continuum single-particle partition function V (2 pi m kB T)^{3/2} / h^3.
    [[nodiscard]] double continuum_partition() const;
};

/// Throws LatticeTooLarge for n_max > 20, NonPositiveInput for bad physics.
ModeLattice build_lattice(double box_L, double mass, double temperature, int n_max,
                          Quantization convention = Quantization::HOverL);

/// Box length at which beta * eps(1, 0, 0) equals `reduced_spacing`.
double box_length_for_spacing(double reduced_spacing, double mass, double temperature,
                              Quantization convention = Quantization::HOverL);

struct CanonicalResult {
    int particle_count = 0;
    Statistics statistics = Statistics::Bose;
    double Z_N = 0.0;
    /// j -> expected fraction of particles sitting in modes holding >= j.
    std::map<int, double> multiplet_fractions;
    /// E[sum_i n_i^2] / N.
    double occupancy_second_moment = 0.0;
};

/// Z_N from the symmetrisation recursion
///   Z_N = (1/N) sum_{k=1..N} (+-1)^{k+1} z1(k beta) Z_{N-k},  Z_0 = 1.
/// Bose multiplet fractions follow from P(n_i >= k) = w_i^k Z_{N-k} / Z_N;
/// Boltzmann uses Z_N = z1^N / N! with binomial occupancy. Single spin channel.
CanonicalResult canonical_partition_recursion(const ModeLattice& lattice, int N,
                                              Statistics statistics);

/// Brute-force sum over all occupation configurations (multisets for Bose,
/// subsets for Fermi). Work is split over first-mode units and merged in
/// order, so `workers` does not change the result.
/// Throws EnumerationTooLarge past 5e6 configurations.
CanonicalResult enumerate_exact(const ModeLattice& lattice, int N, Statistics statistics,
                                unsigned workers = 0);

/// Number of configurations enumerate_exact would visit.
double enumeration_size(std::size_t modes, int N, Statistics statistics);

struct SampleStats {
    long trials = 0;
    double pair_fraction_mean = 0.0;
    double pair_fraction_stderr = 0.0;
    std::uint64_t seed = 0;
};

/// Distinguishable particles drawn independently with p_i ~ exp(-beta eps_i);
/// records per trial the fraction of particles whose mode holds >= j of them.
/// Trial t uses its own counter-based substream derived from (seed, t).
SampleStats sample_multiplets(const ModeLattice& lattice, int N, int j, long trials,
                              std::uint64_t seed, unsigned workers = 0);

/// sample_multiplets with j = 2: fraction of particles sharing a mode.
SampleStats sample_boltzmann_coincidences(const ModeLattice& lattice, int N, long trials,
                                          std::uint64_t seed, unsigned workers = 0);

/// Exact expectation of the sampled quantity:
///   sum_i p_i P(Binomial(N - 1, p_i) >= j - 1).
double boltzmann_multiplet_expectation(const ModeLattice& lattice, int N, int j);

/// Sparse-occupancy approximation (N - 1) z1(2 beta) / z1(beta)^2 of the
/// coincidence fraction.
double sparse_pair_fraction(const ModeLattice& lattice, int N);

struct LatticeFamily {
    double mass = 0.0;
    double temperature = 0.0;
    int n_max = 1;
    Quantization convention = Quantization::HOverL;
    std::vector<double> box_lengths;
};

enum class MultipletMethod { Enumerate, Recursion, Sample };

std::string_view to_string(MultipletMethod m) noexcept;
MultipletMethod parse_multiplet_method(std::string_view text);

struct ScalingRow {
    double box_L = 0.0;
    double eta_effective = 0.0;  // N / z1(beta)
    double fraction = 0.0;       // fraction of particles in >= j occupied modes
    double stderr = 0.0;         // zero for exact methods
};

/// One row per family member, in family order.
std::vector<ScalingRow> multiplet_scaling_report(const LatticeFamily& family, int N,
                                                 Statistics statistics, int j,
                                                 MultipletMethod method, long trials = 0,
                                                 std::uint64_t seed = 0, unsigned workers = 0);

}  // namespace pseudogas
