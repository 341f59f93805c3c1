#include "pseudogas/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "pseudogas/constants.hpp"
#include "pseudogas/core_model.hpp"
#include "pseudogas/error.hpp"
#include "pseudogas/lattice.hpp"
#include "pseudogas/parallel.hpp"
#include "pseudogas/pseudochem.hpp"
#include "pseudogas/statmech.hpp"

namespace pseudogas::cli {
namespace {

class Params {
public:
    explicit Params(const ParameterMap& values) : values_(values) {}

    [[nodiscard]] bool has(std::string_view key) const { return values_.contains(key); }

    [[nodiscard]] double number(std::string_view key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw InvalidInput("missing required --" + std::string(key));
        return parse_double(key, it->second);
    }

    [[nodiscard]] double number_or(std::string_view key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    [[nodiscard]] long integer_or(std::string_view key, long fallback) const {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        const std::string& v = it->second;
        long out = 0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
        if (r.ec != std::errc{} || r.ptr != v.data() + v.size()) {
            throw InvalidInput("--" + std::string(key) + " expects an integer, got '" + v + "'");
        }
        return out;
    }

    [[nodiscard]] int small_integer_or(std::string_view key, int fallback) const {
        const long v = integer_or(key, fallback);
        if (v < -1'000'000 || v > 1'000'000) {
            throw InvalidInput("--" + std::string(key) + " is out of range");
        }
        return static_cast<int>(v);
    }

    [[nodiscard]] std::string text_or(std::string_view key, std::string fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    [[nodiscard]] bool flag(std::string_view key) const {
        const std::string v = text_or(key, "false");
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw InvalidInput("--" + std::string(key) + " expects true or false");
    }

    [[nodiscard]] Statistics statistics(Statistics fallback) const {
        return has("stats") ? parse_statistics(text_or("stats", "")) : fallback;
    }

    [[nodiscard]] Statistics required_statistics() const {
        if (!has("stats")) throw InvalidInput("missing required --stats");
        return parse_statistics(text_or("stats", ""));
    }

    static double parse_double(std::string_view key, const std::string& v) {
        double out = 0.0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
        if (r.ec != std::errc{} || r.ptr != v.data() + v.size() || v.empty()) {
            throw InvalidInput("--" + std::string(key) + " expects a number, got '" + v + "'");
        }
        return out;
    }

private:
    const ParameterMap& values_;
};

struct Operation {
    std::function<std::vector<std::string>(const Params&)> columns;
    std::function<std::vector<double>(const Params&, std::uint64_t seed)> evaluate;
};

std::vector<double> eval_props(const Params& p, std::uint64_t) {
    GasSpec spec;
    spec.count = p.number("count");
    spec.volume = p.number("volume");
    spec.temperature = p.number("temperature");
    spec.mass = p.number("mass");
    spec.spin_two_s = p.small_integer_or("two-s", 0);
    spec.statistics = p.statistics(Statistics::Boltzmann);
    const ReducedState r = reduced_from_physical(spec);
    return {r.eta, r.eta_sp, static_cast<double>(r.g_A), r.lambda_thermal, r.Z0};
}

std::vector<double> eval_fugacity(const Params& p, std::uint64_t) {
    const double eta_sp = p.number("eta-sp");
    const Statistics stats = p.required_statistics();
    const double tol = p.number_or("tol", kDefaultRootTolerance);
    const Fugacity f = solve_fugacity(eta_sp, stats, tol);
    const double residual = occupancy_series(1.5, f.z, stats, kMinSeriesTolerance) - eta_sp;
    return {eta_sp, f.z, std::log(f.z), residual};
}

std::vector<double> eval_pressure(const Params& p, std::uint64_t) {
    const double eta = p.number("eta");
    const int ga = p.small_integer_or("ga", 1);
    if (ga < 1) throw InvalidInput("--ga must be >= 1");
    const Statistics stats = p.required_statistics();
    const double eta_sp = eta / ga;
    const Fugacity f = solve_fugacity(eta_sp, stats);
    const double exact = pressure_ratio_exact(f.z, stats);
    const double first = pressure_first_order(eta, ga, stats);
    return {eta, static_cast<double>(ga), eta_sp, f.z, exact, first, exact - first};
}

std::vector<double> eval_polymer(const Params& p, std::uint64_t) {
    const double eta = p.number("eta");
    const int j = p.small_integer_or("j", 2);
    const MixtureState m = j == 2 ? solve_dimer_fraction(eta) : solve_polymer_fraction(eta, j);
    const double leading = std::pow(static_cast<double>(j), 1.5) * std::pow(eta, j - 1);
    return {eta, static_cast<double>(j), m.fraction, leading, m.residual};
}

std::vector<double> eval_spinpair(const Params& p, std::uint64_t) {
    const int ga = p.small_integer_or("ga", 1);
    const Statistics stats = p.required_statistics();
    const PairSpinContext ctx = PairSpinContext::make(ga, stats);

    double x2 = 0.0;
    if (p.has("x2") == p.has("eta")) throw InvalidInput("give exactly one of --x2 or --eta");
    x2 = p.has("x2") ? p.number("x2") : solve_dimer_fraction(p.number("eta")).fraction;

    const bool physical = p.has("J") || p.has("box-l");
    if (physical && p.has("dp-energy")) {
        throw InvalidInput("give either --dp-energy or --J/--box-l/--mass/--temperature");
    }
    double dp_energy = p.number_or("dp-energy", 0.0);
    if (physical) {
        dp_energy = continuum_criterion(p.integer_or("J", 1), p.number("box-l"),
                                        p.number("mass"), p.number("temperature"));
    }
    if (!(dp_energy >= 0.0)) throw InvalidInput("--dp-energy must be >= 0");
    // Only the reduced energy enters; unit beta and mass carry it.
    const MomentumSplit split = MomentumSplit::from_reduced_energy(dp_energy, 1.0, 1.0);
    const double fraction = pair_fraction_at_dp(x2, split, ctx);
    const double threshold = p.number_or("threshold", kContinuumThreshold);
    return {static_cast<double>(ga),
            static_cast<double>(ctx.g_plus),
            static_cast<double>(ctx.g_minus),
            dp_energy,
            within_continuum(dp_energy, threshold) ? 1.0 : 0.0,
            x2,
            fraction,
            x2 > 0.0 ? fraction / x2 : std::nan("")};
}

bool lattice_sampled(const Params& p) {
    return parse_multiplet_method(p.text_or("method", "enumerate")) == MultipletMethod::Sample;
}

std::vector<double> eval_lattice(const Params& p, std::uint64_t seed) {
    const double mass = p.number("mass");
    const double temperature = p.number("temperature");
    const Quantization conv = parse_quantization(p.text_or("convention", "h_over_L"));
    if (p.has("box-l") == p.has("spacing")) {
        throw InvalidInput("give exactly one of --box-l or --spacing");
    }
    const double L = p.has("box-l")
                         ? p.number("box-l")
                         : box_length_for_spacing(p.number("spacing"), mass, temperature, conv);
    const ModeLattice lat =
        build_lattice(L, mass, temperature, p.small_integer_or("nmax", 1), conv);
    const int N = p.small_integer_or("n", 2);
    const int j = p.small_integer_or("j", 2);
    const Statistics stats = p.statistics(Statistics::Bose);
    const MultipletMethod method = parse_multiplet_method(p.text_or("method", "enumerate"));

    const double z1 = lat.single_particle_sum();
    std::vector<double> row = {static_cast<double>(N), static_cast<double>(lat.mode_count()), z1,
                               lat.continuum_partition(), N / z1};
    if (method == MultipletMethod::Sample) {
        if (stats != Statistics::Boltzmann && p.has("stats")) {
            throw InvalidInput("--method sample draws boltzmann particles; use --stats boltzmann");
        }
        const long trials = p.integer_or("trials", 10000);
        const SampleStats s = sample_multiplets(lat, N, j, trials, seed);
        row.insert(row.end(), {s.pair_fraction_mean, s.pair_fraction_stderr,
                               boltzmann_multiplet_expectation(lat, N, j),
                               j == 2 ? sparse_pair_fraction(lat, N) : std::nan("")});
    } else {
        const CanonicalResult r = method == MultipletMethod::Enumerate
                                      ? enumerate_exact(lat, N, stats)
                                      : canonical_partition_recursion(lat, N, stats);
        const auto it = r.multiplet_fractions.find(j);
        row.insert(row.end(), {r.Z_N, it == r.multiplet_fractions.end() ? 0.0 : it->second,
                               r.occupancy_second_moment});
    }
    return row;
}

const Operation& operation(Subcommand s) {
    static const Operation props{
        [](const Params&) {
            return std::vector<std::string>{"eta", "eta_sp", "g_a", "lambda_thermal", "z0"};
        },
        eval_props};
    static const Operation fugacity{
        [](const Params&) { return std::vector<std::string>{"eta_sp", "z", "ln_z", "residual"}; },
        eval_fugacity};
    static const Operation pressure{
        [](const Params&) {
            return std::vector<std::string>{"eta",   "g_a",  "eta_sp", "z", "ratio",
                                            "ratio_first_order", "difference"};
        },
        eval_pressure};
    static const Operation polymer{
        [](const Params&) {
            return std::vector<std::string>{"eta", "j", "x_j", "leading", "residual"};
        },
        eval_polymer};
    static const Operation spinpair{
        [](const Params&) {
            return std::vector<std::string>{"g_a", "g_plus",  "g_minus",  "dp_energy",
                                            "within_continuum", "x2", "fraction", "suppression"};
        },
        eval_spinpair};
    static const Operation lattice{
        [](const Params& p) {
            std::vector<std::string> names = {"n", "modes", "z1", "z_continuum", "eta_eff"};
            if (lattice_sampled(p)) {
                names.insert(names.end(), {"fraction_j", "stderr", "expected", "sparse_expected"});
            } else {
                names.insert(names.end(), {"z_n", "fraction_j", "second_moment"});
            }
            return names;
        },
        eval_lattice};
    switch (s) {
        case Subcommand::Props: return props;
        case Subcommand::Fugacity: return fugacity;
        case Subcommand::Pressure: return pressure;
        case Subcommand::Polymer: return polymer;
        case Subcommand::Spinpair: return spinpair;
        case Subcommand::Lattice: return lattice;
        case Subcommand::Sweep: break;
    }
    throw InvalidInput("sweep is not a point operation");
}

std::string shortest(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, r.ptr};
}

std::vector<double> sweep_grid(const Params& p) {
    const long points = p.integer_or("points", -1);
    if (points < 0) throw InvalidInput("sweep needs --points >= 0");
    const double from = p.number("from");
    const double to = p.number("to");
    const bool log = p.flag("log");
    if (log && !(from > 0.0 && to > 0.0)) throw InvalidInput("--log needs positive --from/--to");

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (long i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        double v = log ? std::exp(std::log(from) + t * (std::log(to) - std::log(from)))
                       : from + t * (to - from);
        if (i == 0) v = from;
        if (i == points - 1 && points > 1) v = to;
        grid[static_cast<std::size_t>(i)] = v;
    }
    return grid;
}

SweepResult evaluate_sweep(const RunConfig& config) {
    const Params params(config.parameters);
    const Subcommand inner = parse_subcommand(params.text_or("op", ""));
    const std::string axis = params.text_or("axis", "");
    if (axis.empty()) throw InvalidInput("sweep needs --axis");
    const auto& inner_keys = operation_keys(inner);
    const bool axis_known = std::ranges::any_of(
        inner_keys, [&](const KeySpec& k) { return k.name == axis && !k.flag; });
    if (!axis_known) {
        throw InvalidInput("--axis '" + axis + "' is not a parameter of " +
                           std::string(to_string(inner)));
    }
    if (params.has(axis)) throw InvalidInput("--" + axis + " cannot be fixed while swept");

    ParameterMap base;
    for (const auto& [k, v] : config.parameters) {
        const bool grid_key = std::ranges::any_of(operation_keys(Subcommand::Sweep),
                                                  [&](const KeySpec& s) { return s.name == k; });
        if (!grid_key) base.emplace(k, v);
    }
    for (const auto& [k, v] : base) {
        if (!std::ranges::any_of(inner_keys, [&](const KeySpec& s) { return s.name == k; })) {
            throw InvalidInput("unknown key '" + k + "' for " + std::string(to_string(inner)));
        }
    }

    const Operation& op = operation(inner);
    const std::vector<double> grid = sweep_grid(params);
    const std::uint64_t seed = config.seed.value_or(0);

    std::vector<ParameterMap> point_params(grid.size(), base);
    for (std::size_t i = 0; i < grid.size(); ++i) point_params[i][axis] = shortest(grid[i]);

    std::vector<std::vector<double>> rows(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());
    parallel_for(grid.size(), 0, [&](std::size_t i) {
        try {
            rows[i] = op.evaluate(Params(point_params[i]), seed);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });
    // Report the first failing grid point, independent of scheduling.
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }

    ParameterMap naming = base;
    naming[axis] = shortest(grid.empty() ? 0.0 : grid.front());
    std::string axis_column = axis;
    std::ranges::replace(axis_column, '-', '_');
    SweepResult result;
    result.axis_name = axis_column;
    result.axis_values = grid;
    // The axis column already carries the swept value.
    const std::vector<std::string> names = op.columns(Params(naming));
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (names[c] == axis_column) continue;
        kept.push_back(c);
        result.columns.push_back({names[c], {}});
    }
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < kept.size(); ++k) {
            result.columns[k].values.push_back(row[kept[k]]);
        }
    }
    return result;
}

}  // namespace

SweepResult evaluate(const RunConfig& config) {
    if (config.subcommand == Subcommand::Sweep) return evaluate_sweep(config);
    const Params params(config.parameters);
    const Operation& op = operation(config.subcommand);
    const std::vector<double> row = op.evaluate(params, config.seed.value_or(0));
    SweepResult result;
    const std::vector<std::string> names = op.columns(params);
    for (std::size_t c = 0; c < names.size(); ++c) result.columns.push_back({names[c], {row[c]}});
    return result;
}

int report_current_exception(std::ostream& err) {
    try {
        throw;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const SweepResult result = evaluate(config);
        if (config.out_path) {
            std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
            if (!file) throw IoError("cannot open " + *config.out_path + " for writing");
            emit_table(file, result, config.output_format, config.output_precision);
        } else {
            emit_table(out, result, config.output_format, config.output_precision);
        }
        return kExitOk;
    } catch (...) {
        return report_current_exception(err);
    }
}

}  // namespace pseudogas::cli
