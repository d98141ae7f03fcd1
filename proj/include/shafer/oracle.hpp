#pragma once

#include <cstddef>

namespace shafer {

/// Outcome of the one-time round-trip validation of the platform asin.
struct OracleStatus {
    bool platform_ok;       ///< every sample satisfied |sin(asin x) - x| <= tolerance
    double max_residual;    ///< worst |sin(asin x) - x| seen
    double worst_x;
    std::size_t samples;
    double tolerance;
};

inline constexpr std::size_t kOracleSamples = 10000;
inline constexpr double kOracleRoundTripTol = 1e-15;

/// Runs the self-validation on first call (thread-safe) and caches the result.
const OracleStatus& oracle_status();

/// Reference arcsin on [0, 1]: the platform asin when it passed validation,
/// otherwise bisection_arcsin. DomainError outside [0, 1].
double oracle_arcsin(double x);

/// Solves sin(y) = x on [0, pi/2] by bisection until the bracket stops
/// shrinking or is narrower than 1e-15.
double bisection_arcsin(double x);

/// Validation routine behind oracle_status(); exposed for tests.
OracleStatus validate_round_trip(double (*arcsin)(double), std::size_t samples, double tolerance);

}  // namespace shafer
