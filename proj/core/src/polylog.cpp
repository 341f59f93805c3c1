#include "pseudogas/polylog.hpp"

#include <cmath>
#include <string>

#include "pseudogas/error.hpp"
#include "pseudogas/statmech.hpp"
#include "pseudogas/summation.hpp"

namespace pseudogas {
namespace {

void check_tolerance(double tolerance) {
    if (!(tolerance >= kMinSeriesTolerance)) {
        throw DomainError("polylog tolerance must be >= 1e-15");
    }
}

// 0 <= z < 1.
double series_below_one(double s, double z, double tolerance) {
    if (z == 0.0) return 0.0;
    CompensatedSum sum;
    double zk = 1.0;
    for (long k = 1; k <= kMaxSeriesTerms; ++k) {
        zk *= z;
        sum += zk / std::pow(static_cast<double>(k), s);
        const double next = static_cast<double>(k + 1);
        const double tail = zk * z / (std::pow(next, s) * (1.0 - z));
        if (tail <= tolerance * sum.value() || zk == 0.0) return sum.value();
    }
    throw NoConvergence("polylog: series did not converge within 10^7 terms at z = " +
                        std::to_string(z));
}

// Sum_{k>=K} k^{-s} via Euler-Maclaurin; returns the last correction term
// kept so the caller can judge the truncation.
double zeta_tail(double s, double K, double& last_term) {
    const double t0 = std::pow(K, 1.0 - s) / (s - 1.0);
    const double t1 = 0.5 * std::pow(K, -s);
    const double t2 = s * std::pow(K, -s - 1.0) / 12.0;
    const double t3 = -s * (s + 1.0) * (s + 2.0) * std::pow(K, -s - 3.0) / 720.0;
    const double t4 =
        s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(K, -s - 5.0) / 30240.0;
    last_term = std::fabs(t4);
    return t0 + t1 + t2 + t3 + t4;
}

double series_at_one(double s, double tolerance) {
    for (long K = 16; K <= kMaxSeriesTerms; K *= 2) {
        double last = 0.0;
        const double tail = zeta_tail(s, static_cast<double>(K), last);
        CompensatedSum head;
        // Smallest terms first.
        for (long k = K - 1; k >= 1; --k) head += std::pow(static_cast<double>(k), -s);
        const double total = head.value() + tail;
        if (last <= tolerance * total) return total;
    }
    throw NoConvergence("polylog: zeta tail did not converge");
}

}  // namespace

double polylog(double s, double z, double tolerance) {
    check_tolerance(tolerance);
    if (!(s > 0.0)) throw DomainError("polylog: order must be positive");
    if (!(z >= -1.0 && z <= 1.0)) {
        throw DomainError("polylog: argument " + std::to_string(z) + " outside [-1, 1]");
    }
    if (z == 1.0) {
        if (s <= 1.0) throw DomainError("polylog: Li_s(1) diverges for s <= 1");
        return series_at_one(s, tolerance);
    }
    if (z < 0.0) {
        const double w = -z;
        if (w == 1.0 && s <= 1.0) {
            throw DomainError("polylog: Li_s(-1) needs s > 1 in the series route");
        }
        const double even = std::pow(2.0, 1.0 - s) * polylog(s, w * w, tolerance);
        return even - polylog(s, w, tolerance);
    }
    return series_below_one(s, z, tolerance);
}

double fermi_polylog(double s, double z, double tolerance) {
    check_tolerance(tolerance);
    if (!(z >= 0.0) || !std::isfinite(z)) {
        throw DomainError("fermi_polylog: argument must be >= 0");
    }
    // Near z = 1 the series needs ~1/(1 - z) terms; quadrature takes over.
    if (z <= kFermiSeriesLimit || (z == 1.0 && s > 1.0)) {
        return -polylog(s, -z, tolerance);
    }
    return occupancy_integral_quadrature(s, z, Statistics::Fermi, 1e-12);
}

}  // namespace pseudogas
