#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "pseudogas/error.hpp"

namespace pseudogas {

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Newton iteration kept inside a sign-changing bracket; any step that leaves
/// the bracket, or fails to halve the residual, falls back to bisection.
///
/// `fdf(x)` returns a pair-like {f, df}. Requires f(lo) <= 0 <= f(hi) or the
/// reverse. Stops when |f| <= abs_tol, or when the bracket has collapsed to
/// a few ulps (the residual is then as small as the arithmetic allows).
template <class FdF>
RootResult safeguarded_newton(FdF&& fdf, double lo, double hi, double abs_tol,
                              int max_iter = 200) {
    auto [flo, dflo] = fdf(lo);
    auto [fhi, dfhi] = fdf(hi);
    (void)dflo;
    (void)dfhi;
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NoConvergence("safeguarded_newton: root not bracketed");
    }
    // Orient so that f(lo) < 0 < f(hi).
    const bool increasing = flo < 0.0;

    double x = 0.5 * (lo + hi);
    double prev_abs = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iter; ++it) {
        auto [f, df] = fdf(x);
        if (std::fabs(f) <= abs_tol) return {x, f, it};
        if ((f < 0.0) == increasing) {
            lo = x;
        } else {
            hi = x;
        }
        const double width = hi - lo;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(x) ||
            width <= std::numeric_limits<double>::denorm_min()) {
            return {x, f, it};
        }
        double next = x - f / df;
        const bool newton_ok = std::isfinite(next) && df != 0.0 && next > lo && next < hi &&
                               std::fabs(f) <= 0.5 * prev_abs;
        if (!newton_ok) next = 0.5 * (lo + hi);
        if (next == x) return {x, f, it};
        prev_abs = std::fabs(f);
        x = next;
    }
    throw NoConvergence("safeguarded_newton: iteration cap of " + std::to_string(max_iter) +
                        " reached");
}

}  // namespace pseudogas
