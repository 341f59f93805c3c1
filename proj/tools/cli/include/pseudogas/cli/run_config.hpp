#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudogas/cli/table.hpp"
#include "pseudogas/error.hpp"

namespace pseudogas::cli {

class IoError : public Error {
public:
    using Error::Error;
};

enum class Subcommand { Props, Fugacity, Pressure, Polymer, Spinpair, Lattice, Sweep };

std::string_view to_string(Subcommand s) noexcept;
Subcommand parse_subcommand(std::string_view text);

using ParameterMap = std::map<std::string, std::string, std::less<>>;

struct KeySpec {
    std::string name;
    std::string help;
    bool flag = false;
};

/// Keys a subcommand's computation reads (sweep: the grid keys only).
const std::vector<KeySpec>& operation_keys(Subcommand s);

/// Output keys every subcommand accepts: format, precision, seed, out.
const std::vector<KeySpec>& common_keys();

struct RunConfig {
    Subcommand subcommand = Subcommand::Props;
    ParameterMap parameters;  // computation keys only
    TableFormat output_format = TableFormat::Csv;
    int output_precision = kDefaultPrecision;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
};

/// Flat `key = value` lines; `#` starts a comment; blank lines ignored.
/// Throws InvalidInput on malformed lines or duplicate keys.
ParameterMap parse_config_text(std::string_view text);

/// Throws IoError if the file cannot be read.
ParameterMap read_config_file(const std::filesystem::path& path);

/// Merges file values with command-line values (the latter win), rejects keys
/// the subcommand does not know, and splits out the output settings.
RunConfig make_run_config(Subcommand subcommand, const ParameterMap& file_values,
                          const ParameterMap& cli_values);

}  // namespace pseudogas::cli
