#include "pseudogas/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pseudogas::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool has_key(const std::vector<KeySpec>& keys, std::string_view name) {
    return std::ranges::any_of(keys, [&](const KeySpec& k) { return k.name == name; });
}

}  // namespace

std::string_view to_string(Subcommand s) noexcept {
    switch (s) {
        case Subcommand::Props: return "props";
        case Subcommand::Fugacity: return "fugacity";
        case Subcommand::Pressure: return "pressure";
        case Subcommand::Polymer: return "polymer";
        case Subcommand::Spinpair: return "spinpair";
        case Subcommand::Lattice: return "lattice";
        case Subcommand::Sweep: return "sweep";
    }
    return "unknown";
}

Subcommand parse_subcommand(std::string_view text) {
    for (Subcommand s : {Subcommand::Props, Subcommand::Fugacity, Subcommand::Pressure,
                         Subcommand::Polymer, Subcommand::Spinpair, Subcommand::Lattice,
                         Subcommand::Sweep}) {
        if (to_string(s) == text) return s;
    }
    throw InvalidInput("unknown subcommand '" + std::string(text) + "'");
}

const std::vector<KeySpec>& operation_keys(Subcommand s) {
    static const std::vector<KeySpec> props = {
        {"count", "particle number N (real, > 0)"},
        {"volume", "volume V in m^3"},
        {"temperature", "temperature T in K"},
        {"mass", "particle mass m in kg"},
        {"two-s", "twice the spin quantum number (default 0)"},
        {"stats", "bose | fermi | boltzmann (default boltzmann)"},
    };
    static const std::vector<KeySpec> fugacity = {
        {"eta-sp", "per-spin-state eta"},
        {"stats", "bose | fermi | boltzmann"},
        {"tol", "absolute residual tolerance (default 1e-14)"},
    };
    static const std::vector<KeySpec> pressure = {
        {"eta", "eta (spin-summed)"},
        {"ga", "spin degeneracy g_A (default 1)"},
        {"stats", "bose | fermi | boltzmann"},
    };
    static const std::vector<KeySpec> polymer = {
        {"eta", "eta, in [0, 0.2)"},
        {"j", "pseudo-polymer order (default 2)"},
    };
    static const std::vector<KeySpec> spinpair = {
        {"ga", "spin degeneracy g_A (default 1)"},
        {"stats", "bose | fermi | boltzmann"},
        {"x2", "zero-gap pair fraction (alternative to --eta)"},
        {"eta", "eta; the pair fraction is solved from it"},
        {"dp-energy", "reduced pair energy beta dp^2 / m (default 0)"},
        {"J", "momentum separation index; with box-l, mass, temperature"},
        {"box-l", "box edge L in m"},
        {"mass", "particle mass in kg"},
        {"temperature", "temperature in K"},
        {"threshold", "continuum threshold (default 1e-3)"},
    };
    static const std::vector<KeySpec> lattice = {
        {"box-l", "box edge L in m"},
        {"spacing", "beta eps(1,0,0); alternative to --box-l"},
        {"mass", "particle mass in kg"},
        {"temperature", "temperature in K"},
        {"nmax", "modes per axis run over [-nmax, nmax] (default 1)"},
        {"convention", "h_over_L | hbar_over_L (default h_over_L)"},
        {"n", "particle count (default 2)"},
        {"stats", "bose | fermi | boltzmann (default bose)"},
        {"method", "enumerate | recursion | sample (default enumerate)"},
        {"j", "multiplet order (default 2)"},
        {"trials", "sampler trials (default 10000)"},
    };
    static const std::vector<KeySpec> sweep = {
        {"op", "operation to sweep: props | fugacity | pressure | polymer | spinpair | lattice"},
        {"axis", "parameter of the operation to vary"},
        {"from", "first grid value"},
        {"to", "last grid value"},
        {"points", "number of grid points (>= 0)"},
        {"log", "logarithmic spacing", true},
    };
    switch (s) {
        case Subcommand::Props: return props;
        case Subcommand::Fugacity: return fugacity;
        case Subcommand::Pressure: return pressure;
        case Subcommand::Polymer: return polymer;
        case Subcommand::Spinpair: return spinpair;
        case Subcommand::Lattice: return lattice;
        case Subcommand::Sweep: return sweep;
    }
    return props;
}

const std::vector<KeySpec>& common_keys() {
    static const std::vector<KeySpec> keys = {
        {"format", "csv | json (default csv)"},
        {"precision", "significant digits (default 12)"},
        {"seed", "64-bit seed for stochastic operations (default 0)"},
        {"out", "write the table to this path instead of stdout"},
    };
    return keys;
}

ParameterMap parse_config_text(std::string_view text) {
    ParameterMap out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidInput("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw InvalidInput("config line " + std::to_string(line_no) + ": empty key");
        if (!out.emplace(key, value).second) {
            throw InvalidInput("config line " + std::to_string(line_no) + ": duplicate key '" +
                               key + "'");
        }
    }
    return out;
}

ParameterMap read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

RunConfig make_run_config(Subcommand subcommand, const ParameterMap& file_values,
                          const ParameterMap& cli_values) {
    ParameterMap merged = file_values;
    for (const auto& [k, v] : cli_values) merged[k] = v;

    std::vector<KeySpec> allowed = operation_keys(subcommand);
    if (subcommand == Subcommand::Sweep) {
        // The swept operation's own keys are checked once `op` is known.
        const auto op = merged.find("op");
        if (op == merged.end()) throw InvalidInput("sweep needs --op");
        const Subcommand inner = parse_subcommand(op->second);
        if (inner == Subcommand::Sweep) throw InvalidInput("sweep cannot sweep itself");
        const auto& inner_keys = operation_keys(inner);
        allowed.insert(allowed.end(), inner_keys.begin(), inner_keys.end());
    }

    RunConfig cfg;
    cfg.subcommand = subcommand;
    for (const auto& [key, value] : merged) {
        if (key == "format") {
            cfg.output_format = parse_table_format(value);
        } else if (key == "precision") {
            int p = 0;
            const auto r = std::from_chars(value.data(), value.data() + value.size(), p);
            if (r.ec != std::errc{} || r.ptr != value.data() + value.size() || p < 1 || p > 17) {
                throw InvalidInput("precision must be an integer in [1, 17]");
            }
            cfg.output_precision = p;
        } else if (key == "seed") {
            std::uint64_t s = 0;
            const auto r = std::from_chars(value.data(), value.data() + value.size(), s);
            if (r.ec != std::errc{} || r.ptr != value.data() + value.size()) {
                throw InvalidInput("seed must be an unsigned 64-bit integer");
            }
            cfg.seed = s;
        } else if (key == "out") {
            cfg.out_path = value;
        } else if (has_key(allowed, key)) {
            cfg.parameters.emplace(key, value);
        } else {
            throw InvalidInput("unknown key '" + key + "' for " +
                               std::string(to_string(subcommand)));
        }
    }
    return cfg;
}

}  // namespace pseudogas::cli
