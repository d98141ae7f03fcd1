#include "shafer/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shafer/errors.hpp"

namespace shafer {

namespace {

double platform_asin(double x) { return std::asin(x); }

}  // namespace

OracleStatus validate_round_trip(double (*arcsin)(double), std::size_t samples, double tolerance) {
    OracleStatus s{true, 0.0, 0.0, samples, tolerance};
    const double last = static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / last;
        const double residual = std::abs(std::sin(arcsin(x)) - x);
        if (residual > s.max_residual) {
            s.max_residual = residual;
            s.worst_x = x;
        }
    }
    s.platform_ok = s.max_residual <= tolerance;
    return s;
}

const OracleStatus& oracle_status() {
    static const OracleStatus status =
        validate_round_trip(&platform_asin, kOracleSamples, kOracleRoundTripTol);
    return status;
}

double bisection_arcsin(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("bisection_arcsin: x must lie in [0, 1], got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return std::numbers::pi / 2.0;
    double lo = 0.0;
    double hi = std::numbers::pi / 2.0;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (std::sin(mid) < x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double oracle_arcsin(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("oracle_arcsin: x must lie in [0, 1], got " + std::to_string(x));
    }
    return oracle_status().platform_ok ? std::asin(x) : bisection_arcsin(x);
}

}  // namespace shafer
