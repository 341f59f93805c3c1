#pragma once

#include <span>

namespace pseudogas {

/// Least-squares slope of log(y) against log(x). All values must be positive
/// and there must be at least two distinct abscissae.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace pseudogas
