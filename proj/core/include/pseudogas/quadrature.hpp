#pragma once

#include <functional>

namespace pseudogas {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on a finite
/// interval. The interval with the largest error estimate is bisected until
/// the summed estimate is below max(abs_tol, rel_tol * |I|).
///
/// Throws QuadratureFailure if `max_subdivisions` is reached first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol = 0.0,
                                    int max_subdivisions = 2000);

}  // namespace pseudogas
