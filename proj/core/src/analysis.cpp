#include "pseudogas/analysis.hpp"

#include <cmath>

#include "pseudogas/error.hpp"

namespace pseudogas {

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidInput("loglog_slope needs two equal-length series of at least 2 points");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("loglog_slope: non-positive value");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw DomainError("loglog_slope: abscissae are all equal");
    return sxy / sxx;
}

}  // namespace pseudogas
