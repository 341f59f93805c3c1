#include "pseudogas/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "pseudogas/cli/run_config.hpp"
#include "pseudogas/error.hpp"

namespace pseudogas::cli {
namespace {

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

std::string json_number(double v, int precision) {
    return std::isfinite(v) ? format_number(v, precision) : "null";
}

void emit_json_array(std::ostream& out, const std::vector<double>& values, int precision) {
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << json_number(values[i], precision);
    }
    out << ']';
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "json") return TableFormat::Json;
    throw InvalidInput("unknown output format '" + std::string(text) + "' (csv or json)");
}

std::size_t SweepResult::rows() const noexcept {
    if (!axis_name.empty()) return axis_values.size();
    return columns.empty() ? 0 : columns.front().values.size();
}

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (precision < 1) throw InvalidInput("precision must be >= 1");

    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, precision - 1);
    std::string text(buf, res.ptr);
    const auto e = text.find('e');
    std::string mantissa = text.substr(0, e);
    std::string_view exponent = std::string_view(text).substr(e + 1);
    std::string sign;
    if (!exponent.empty() && (exponent.front() == '+' || exponent.front() == '-')) {
        if (exponent.front() == '-') sign = "-";
        exponent.remove_prefix(1);
    }
    while (exponent.size() > 1 && exponent.front() == '0') exponent.remove_prefix(1);
    if (exponent == "0") sign.clear();
    return mantissa + "e" + sign + std::string(exponent);
}

void emit_table(std::ostream& out, const SweepResult& result, TableFormat format,
                int precision) {
    const std::size_t rows = result.rows();
    for (const Column& c : result.columns) {
        if (c.values.size() != rows) {
            throw InvalidInput("column '" + c.name + "' has " + std::to_string(c.values.size()) +
                               " rows, expected " + std::to_string(rows));
        }
    }
    const bool with_axis = !result.axis_name.empty();

    if (format == TableFormat::Csv) {
        bool first = true;
        auto cell = [&](const std::string& s) {
            if (!first) out << ',';
            out << s;
            first = false;
        };
        if (with_axis) cell(result.axis_name);
        for (const Column& c : result.columns) cell(c.name);
        out << '\n';
        for (std::size_t r = 0; r < rows; ++r) {
            first = true;
            if (with_axis) cell(format_number(result.axis_values[r], precision));
            for (const Column& c : result.columns) cell(format_number(c.values[r], precision));
            out << '\n';
        }
    } else {
        out << "{\"axis\":";
        if (with_axis) {
            out << "{\"name\":" << json_string(result.axis_name) << ",\"values\":";
            emit_json_array(out, result.axis_values, precision);
            out << '}';
        } else {
            out << "null";
        }
        out << ",\"columns\":[";
        for (std::size_t i = 0; i < result.columns.size(); ++i) {
            if (i) out << ',';
            out << "{\"name\":" << json_string(result.columns[i].name) << ",\"values\":";
            emit_json_array(out, result.columns[i].values, precision);
            out << '}';
        }
        out << "]}\n";
    }
    out.flush();
    if (!out) throw IoError("failed writing table output");
}

}  // namespace pseudogas::cli
