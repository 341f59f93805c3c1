#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pseudogas::cli {

enum class TableFormat { Csv, Json };

TableFormat parse_table_format(std::string_view text);

struct Column {
    std::string name;
    std::vector<double> values;
};

/// An ordered table: an optional axis column followed by named value columns
/// of equal length. An empty axis name means "no axis column".
struct SweepResult {
    std::string axis_name;
    std::vector<double> axis_values;
    std::vector<Column> columns;

    [[nodiscard]] std::size_t rows() const noexcept;
};

inline constexpr int kDefaultPrecision = 12;

/// Lowercase scientific notation with exactly `precision` significant digits
/// and a bare exponent: 1.0 at precision 12 is "1.00000000000e0".
std::string format_number(double value, int precision);

/// CSV: header line then one line per row, comma separated, LF terminated.
/// JSON: {"axis": {"name", "values"} | null, "columns": [{"name", "values"}]}.
/// Throws IoError on stream failure, InvalidInput on ragged columns.
void emit_table(std::ostream& out, const SweepResult& result, TableFormat format,
                int precision = kDefaultPrecision);

}  // namespace pseudogas::cli
