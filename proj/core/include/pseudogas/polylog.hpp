#pragma once

namespace pseudogas {

inline constexpr double kDefaultSeriesTolerance = 1e-12;
inline constexpr double kMinSeriesTolerance = 1e-15;
inline constexpr long kMaxSeriesTerms = 10'000'000;
inline constexpr double kFermiSeriesLimit = 0.95;

/// Li_s(z) = sum_{k>=1} z^k / k^s for real z in [-1, 1] and order s > 0.
///
/// For 0 <= z < 1 the series is truncated once the geometric tail bound
/// z^{K+1} / ((K+1)^s (1 - z)) drops below `tolerance` times the partial sum.
/// At z = 1 (requires s > 1) the partial sum is closed with an Euler-Maclaurin
/// tail. Negative arguments go through Li_s(-z) = 2^{1-s} Li_s(z^2) - Li_s(z).
///
/// Throws DomainError for z outside [-1, 1], s <= 0, z = 1 with s <= 1, or a
/// tolerance below 1e-15; NoConvergence past 10^7 terms.
double polylog(double s, double z, double tolerance = kDefaultSeriesTolerance);

/// -Li_s(-z) for z >= 0, the Fermi-Dirac branch. Uses the series identity for
/// z <= 0.95 and at z = 1, quadrature of the Fermi-Dirac integral (relative
/// accuracy 1e-12) elsewhere.
double fermi_polylog(double s, double z, double tolerance = kDefaultSeriesTolerance);

}  // namespace pseudogas
