#pragma once

#include <ostream>

#include "pseudogas/cli/run_config.hpp"
#include "pseudogas/cli/table.hpp"

namespace pseudogas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitBudget = 4;

/// Computes the table a configuration describes. Throws library errors.
SweepResult evaluate(const RunConfig& config);

/// evaluate + emit_table to `out` (or to config.out_path). Errors are reported
/// on `err` and mapped to exit codes: 2 invalid input, 3 non-convergence,
/// 4 budget exceeded, 1 I/O.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Maps the exception currently being handled to an exit code, writing its
/// message to `err`. Must be called from inside a catch block.
int report_current_exception(std::ostream& err);

}  // namespace pseudogas::cli
