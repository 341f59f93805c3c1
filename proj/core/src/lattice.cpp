#include "pseudogas/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "pseudogas/constants.hpp"
#include "pseudogas/error.hpp"
#include "pseudogas/parallel.hpp"
#include "pseudogas/rng.hpp"
#include "pseudogas/summation.hpp"

namespace pseudogas {
namespace {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::ranges::transform(out, out.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double quantum_of(Quantization q) {
    return q == Quantization::HbarOverL ? constants::hbar : constants::planck_h;
}

void check_particle_count(int N) {
    if (N < 1 || N > kMaxCanonicalN) {
        throw InvalidInput("canonical particle count must be in [1, 12], got " +
                           std::to_string(N));
    }
}

// P(Binomial(n, p) >= r), summed over the upper tail directly.
double binomial_upper_tail(int n, double p, int r) {
    if (r <= 0) return 1.0;
    if (r > n || p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    const double q = 1.0 - p;
    double log_term = std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0) +
                      r * std::log(p) + (n - r) * std::log1p(-p);
    double term = std::exp(log_term);
    CompensatedSum tail;
    for (int k = r; k <= n; ++k) {
        tail += term;
        term *= static_cast<double>(n - k) / (k + 1) * (p / q);
        if (term == 0.0) break;
    }
    return std::min(tail.value(), 1.0);
}

struct EnumerationAccumulator {
    CompensatedSum Z;
    CompensatedSum second;
    std::vector<CompensatedSum> at_least;  // index j - 1

    explicit EnumerationAccumulator(int N) : at_least(static_cast<std::size_t>(N)) {}

    void merge(const EnumerationAccumulator& other) {
        Z += other.Z;
        second += other.second;
        for (std::size_t j = 0; j < at_least.size(); ++j) at_least[j] += other.at_least[j];
    }
};

class Enumerator {
public:
    Enumerator(const std::vector<double>& w, int N, bool fermi)
        : w_(w), N_(N), fermi_(fermi), idx_(static_cast<std::size_t>(N)) {}

    void run_unit(std::size_t first, EnumerationAccumulator& acc) {
        idx_[0] = first;
        descend(1, fermi_ ? first + 1 : first, w_[first], acc);
    }

private:
    void descend(int depth, std::size_t start, double weight, EnumerationAccumulator& acc) {
        // Weights are non-increasing along the mode order, so an underflowed
        // prefix can only produce zero-weight leaves.
        if (weight == 0.0) return;
        if (depth == N_) {
            leaf(weight, acc);
            return;
        }
        const std::size_t remaining = static_cast<std::size_t>(N_ - depth);
        const std::size_t stop = fermi_ ? w_.size() - remaining + 1 : w_.size();
        for (std::size_t i = start; i < stop; ++i) {
            idx_[static_cast<std::size_t>(depth)] = i;
            descend(depth + 1, fermi_ ? i + 1 : i, weight * w_[i], acc);
        }
    }

    void leaf(double weight, EnumerationAccumulator& acc) {
        acc.Z += weight;
        std::size_t run_start = 0;
        for (std::size_t k = 1; k <= idx_.size(); ++k) {
            if (k == idx_.size() || idx_[k] != idx_[run_start]) {
                const auto n = static_cast<double>(k - run_start);
                acc.second += weight * n * n;
                for (std::size_t j = 0; j < k - run_start; ++j) acc.at_least[j] += weight * n;
                run_start = k;
            }
        }
    }

    const std::vector<double>& w_;
    int N_;
    bool fermi_;
    std::vector<std::size_t> idx_;
};

std::vector<double> cumulative(const std::vector<double>& w) {
    std::vector<double> cdf(w.size());
    CompensatedSum s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i];
        cdf[i] = s.value();
    }
    return cdf;
}

}  // namespace

std::string_view to_string(Quantization q) noexcept {
    return q == Quantization::HbarOverL ? "hbar_over_L" : "h_over_L";
}

Quantization parse_quantization(std::string_view text) {
    const std::string t = lowercase(text);
    if (t == "hbar_over_l" || t == "hbar") return Quantization::HbarOverL;
    if (t == "h_over_l" || t == "h") return Quantization::HOverL;
    throw InvalidInput("unknown quantization convention '" + std::string(text) + "'");
}

std::string_view to_string(MultipletMethod m) noexcept {
    switch (m) {
        case MultipletMethod::Enumerate: return "enumerate";
        case MultipletMethod::Recursion: return "recursion";
        case MultipletMethod::Sample: return "sample";
    }
    return "unknown";
}

MultipletMethod parse_multiplet_method(std::string_view text) {
    const std::string t = lowercase(text);
    if (t == "enumerate") return MultipletMethod::Enumerate;
    if (t == "recursion") return MultipletMethod::Recursion;
    if (t == "sample") return MultipletMethod::Sample;
    throw InvalidInput("unknown method '" + std::string(text) +
                       "' (expected enumerate, recursion or sample)");
}

double ModeLattice::single_particle_sum(int k) const {
    CompensatedSum s;
    // Ascending energies means descending terms; add smallest first.
    for (auto it = energies.rbegin(); it != energies.rend(); ++it) s += std::exp(-k * beta * *it);
    return s.value();
}

std::vector<double> ModeLattice::weights(int k) const {
    std::vector<double> w(energies.size());
    std::ranges::transform(energies, w.begin(), [&](double e) { return std::exp(-k * beta * e); });
    return w;
}

double ModeLattice::continuum_partition() const {
    const double thermal = 2.0 * std::numbers::pi * mass / beta;
    return box_L * box_L * box_L * std::pow(thermal, 1.5) /
           std::pow(constants::planck_h, 3);
}

ModeLattice build_lattice(double box_L, double mass, double temperature, int n_max,
                          Quantization convention) {
    if (!(box_L > 0.0) || !(mass > 0.0) || !(temperature > 0.0)) {
        throw NonPositiveInput("lattice needs positive box length, mass and temperature");
    }
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");
    if (n_max > kMaxLatticeNMax) {
        throw LatticeTooLarge("n_max = " + std::to_string(n_max) + " exceeds the limit of 20");
    }
    ModeLattice lat;
    lat.box_L = box_L;
    lat.mass = mass;
    lat.beta = 1.0 / (constants::boltzmann_kB * temperature);
    lat.n_max = n_max;
    lat.convention = convention;

    const double step = quantum_of(convention) / box_L;
    const double scale = step * step / (2.0 * mass);
    const std::size_t side = static_cast<std::size_t>(2 * n_max + 1);
    lat.energies.reserve(side * side * side);
    for (int x = -n_max; x <= n_max; ++x) {
        for (int y = -n_max; y <= n_max; ++y) {
            for (int z = -n_max; z <= n_max; ++z) {
                lat.energies.push_back(scale * static_cast<double>(x * x + y * y + z * z));
            }
        }
    }
    std::ranges::sort(lat.energies);
    return lat;
}

double box_length_for_spacing(double reduced_spacing, double mass, double temperature,
                              Quantization convention) {
    if (!(reduced_spacing > 0.0) || !(mass > 0.0) || !(temperature > 0.0)) {
        throw NonPositiveInput("spacing, mass and temperature must be positive");
    }
    const double beta = 1.0 / (constants::boltzmann_kB * temperature);
    return quantum_of(convention) * std::sqrt(beta / (2.0 * mass * reduced_spacing));
}

CanonicalResult canonical_partition_recursion(const ModeLattice& lattice, int N,
                                              Statistics statistics) {
    check_particle_count(N);
    CanonicalResult out;
    out.particle_count = N;
    out.statistics = statistics;

    std::vector<double> z1(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = 1; k <= N; ++k) z1[static_cast<std::size_t>(k)] = lattice.single_particle_sum(k);

    if (statistics == Statistics::Boltzmann) {
        out.Z_N = std::pow(z1[1], N) / std::tgamma(N + 1.0);
        const double sum_p2 = lattice.single_particle_sum(2) / (z1[1] * z1[1]);
        for (int j = 1; j <= N; ++j) {
            out.multiplet_fractions[j] = boltzmann_multiplet_expectation(lattice, N, j);
        }
        out.occupancy_second_moment = 1.0 + (N - 1) * sum_p2;
        return out;
    }

    const bool fermi = statistics == Statistics::Fermi;
    if (fermi && static_cast<std::size_t>(N) > lattice.mode_count()) {
        out.Z_N = 0.0;  // Pauli: more particles than single-channel modes
        return out;
    }

    std::vector<double> Z(static_cast<std::size_t>(N) + 1, 0.0);
    Z[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        CompensatedSum s;
        for (int k = 1; k <= n; ++k) {
            const double sign = (fermi && k % 2 == 0) ? -1.0 : 1.0;
            s += sign * z1[static_cast<std::size_t>(k)] * Z[static_cast<std::size_t>(n - k)];
        }
        Z[static_cast<std::size_t>(n)] = s.value() / n;
    }
    out.Z_N = Z[static_cast<std::size_t>(N)];

    if (fermi) {
        out.multiplet_fractions[1] = 1.0;
        for (int j = 2; j <= N; ++j) out.multiplet_fractions[j] = 0.0;
        out.occupancy_second_moment = 1.0;
        return out;
    }

    // Bose: sum_i P(n_i >= k) = z1(k beta) Z_{N-k} / Z_N.
    auto at_least = [&](int k) {
        return z1[static_cast<std::size_t>(k)] * Z[static_cast<std::size_t>(N - k)] / out.Z_N;
    };
    for (int j = 1; j <= N; ++j) {
        CompensatedSum s;
        s += j * at_least(j);
        for (int k = j + 1; k <= N; ++k) s += at_least(k);
        out.multiplet_fractions[j] = s.value() / N;
    }
    CompensatedSum second;
    for (int k = 1; k <= N; ++k) second += (2.0 * k - 1.0) * at_least(k);
    out.occupancy_second_moment = second.value() / N;
    return out;
}

double enumeration_size(std::size_t modes, int N, Statistics statistics) {
    // C(M + N - 1, N) for multisets, C(M, N) for subsets.
    const double top = statistics == Statistics::Fermi
                           ? static_cast<double>(modes)
                           : static_cast<double>(modes) + N - 1.0;
    if (top < N) return 0.0;
    return std::round(std::exp(std::lgamma(top + 1.0) - std::lgamma(N + 1.0) -
                               std::lgamma(top - N + 1.0)));
}

CanonicalResult enumerate_exact(const ModeLattice& lattice, int N, Statistics statistics,
                                unsigned workers) {
    check_particle_count(N);
    if (statistics == Statistics::Boltzmann) {
        throw DomainError("enumerate_exact covers bose and fermi statistics only");
    }
    const double size = enumeration_size(lattice.mode_count(), N, statistics);
    if (size > kEnumerationBudget) {
        throw EnumerationTooLarge("enumeration of " + std::to_string(static_cast<long long>(size)) +
                                  " configurations exceeds the budget of 5e6");
    }

    CanonicalResult out;
    out.particle_count = N;
    out.statistics = statistics;
    const bool fermi = statistics == Statistics::Fermi;
    if (fermi && static_cast<std::size_t>(N) > lattice.mode_count()) return out;

    const std::vector<double> w = lattice.weights();
    const std::size_t units =
        fermi ? lattice.mode_count() - static_cast<std::size_t>(N) + 1 : lattice.mode_count();
    std::vector<EnumerationAccumulator> partial(units, EnumerationAccumulator(N));
    parallel_for(units, workers, [&](std::size_t u) {
        Enumerator e(w, N, fermi);
        e.run_unit(u, partial[u]);
    });
    EnumerationAccumulator total(N);
    for (const auto& p : partial) total.merge(p);

    out.Z_N = total.Z.value();
    if (out.Z_N > 0.0) {
        for (int j = 1; j <= N; ++j) {
            out.multiplet_fractions[j] =
                total.at_least[static_cast<std::size_t>(j - 1)].value() / (N * out.Z_N);
        }
        out.occupancy_second_moment = total.second.value() / (N * out.Z_N);
    }
    return out;
}

SampleStats sample_multiplets(const ModeLattice& lattice, int N, int j, long trials,
                              std::uint64_t seed, unsigned workers) {
    if (N < 2) throw InvalidInput("sampling needs at least 2 particles");
    if (j < 1) throw InvalidInput("multiplet order must be >= 1");
    if (trials < kMinSampleTrials) throw InvalidInput("sampling needs at least 100 trials");

    const std::vector<double> cdf = cumulative(lattice.weights());
    const double total = cdf.back();
    if (!(total > 0.0)) throw DomainError("lattice weights vanish");

    constexpr long kBlock = 1024;
    const auto blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
    std::vector<double> per_trial(static_cast<std::size_t>(trials));
    parallel_for(blocks, workers, [&](std::size_t b) {
        std::vector<std::size_t> modes(static_cast<std::size_t>(N));
        const long begin = static_cast<long>(b) * kBlock;
        const long end = std::min(trials, begin + kBlock);
        for (long t = begin; t < end; ++t) {
            CounterRng rng(seed, static_cast<std::uint64_t>(t));
            for (auto& m : modes) {
                const double u = rng.uniform() * total;
                const auto it = std::ranges::upper_bound(cdf, u);
                m = std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
            }
            std::ranges::sort(modes);
            long in_multiplets = 0;
            std::size_t run_start = 0;
            for (std::size_t k = 1; k <= modes.size(); ++k) {
                if (k == modes.size() || modes[k] != modes[run_start]) {
                    const auto run = static_cast<long>(k - run_start);
                    if (run >= j) in_multiplets += run;
                    run_start = k;
                }
            }
            per_trial[static_cast<std::size_t>(t)] = static_cast<double>(in_multiplets) / N;
        }
    });

    CompensatedSum sum;
    for (double f : per_trial) sum += f;
    const double mean = sum.value() / static_cast<double>(trials);
    CompensatedSum sq;
    for (double f : per_trial) sq += (f - mean) * (f - mean);
    const double variance = sq.value() / static_cast<double>(trials - 1);

    SampleStats out;
    out.trials = trials;
    out.pair_fraction_mean = mean;
    out.pair_fraction_stderr = std::sqrt(variance / static_cast<double>(trials));
    out.seed = seed;
    return out;
}

SampleStats sample_boltzmann_coincidences(const ModeLattice& lattice, int N, long trials,
                                          std::uint64_t seed, unsigned workers) {
    return sample_multiplets(lattice, N, 2, trials, seed, workers);
}

double boltzmann_multiplet_expectation(const ModeLattice& lattice, int N, int j) {
    if (N < 1 || j < 1) throw InvalidInput("N and j must be >= 1");
    const std::vector<double> w = lattice.weights();
    const double z1 = lattice.single_particle_sum();
    CompensatedSum s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const double p = *it / z1;
        if (p > 0.0) s += p * binomial_upper_tail(N - 1, p, j - 1);
    }
    return s.value();
}

double sparse_pair_fraction(const ModeLattice& lattice, int N) {
    const double z1 = lattice.single_particle_sum();
    return (N - 1) * lattice.single_particle_sum(2) / (z1 * z1);
}

std::vector<ScalingRow> multiplet_scaling_report(const LatticeFamily& family, int N,
                                                 Statistics statistics, int j,
                                                 MultipletMethod method, long trials,
                                                 std::uint64_t seed, unsigned workers) {
    if (j < 1) throw InvalidInput("multiplet order must be >= 1");
    if (method == MultipletMethod::Sample && statistics != Statistics::Boltzmann) {
        throw DomainError("the coincidence sampler draws distinguishable (boltzmann) particles");
    }
    std::vector<ScalingRow> rows;
    rows.reserve(family.box_lengths.size());
    for (double L : family.box_lengths) {
        const ModeLattice lat =
            build_lattice(L, family.mass, family.temperature, family.n_max, family.convention);
        ScalingRow row;
        row.box_L = L;
        row.eta_effective = N / lat.single_particle_sum();
        switch (method) {
            case MultipletMethod::Enumerate:
            case MultipletMethod::Recursion: {
                const CanonicalResult r = method == MultipletMethod::Enumerate
                                              ? enumerate_exact(lat, N, statistics, workers)
                                              : canonical_partition_recursion(lat, N, statistics);
                const auto it = r.multiplet_fractions.find(j);
                row.fraction = it == r.multiplet_fractions.end() ? 0.0 : it->second;
                break;
            }
            case MultipletMethod::Sample: {
                const SampleStats s = sample_multiplets(lat, N, j, trials, seed, workers);
                row.fraction = s.pair_fraction_mean;
                row.stderr = s.pair_fraction_stderr;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pseudogas
