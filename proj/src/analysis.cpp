#include "shafer/analysis.hpp"

#include <cmath>
#include <limits>

#include "shafer/errors.hpp"
#include "shafer/oracle.hpp"
#include "shafer/proof_aux.hpp"

namespace shafer {

MinimumResult find_interior_minimum(Alpha alpha, double x_tol) {
    return find_interior_minimum(alpha, x_tol, kSearchLowerEdge, 1.0);
}

MinimumResult find_interior_minimum(Alpha alpha, double x_tol, double lo, double hi) {
    if (classify_regime(alpha) != Regime::UniqueMinimum) {
        throw RegimeError("find_interior_minimum: requires alpha_star < alpha < 4");
    }
    if (!(x_tol > 0.0 && x_tol <= 1e-6)) {
        throw DomainError("find_interior_minimum: x_tol must lie in (0, 1e-6]");
    }
    if (!(lo > 0.0 && hi <= 1.0 && lo < hi)) {
        throw DomainError("find_interior_minimum: bracket must satisfy 0 < lo < hi <= 1");
    }
    return golden_section_minimize([alpha](double x) { return f_alpha(x, alpha); }, lo, hi, x_tol,
                                   kMaxSearchIterations);
}

double sharpened_mid_lower_constant(Alpha alpha) {
    return find_interior_minimum(alpha, 1e-10).f_min;
}

GapProfile gap_profile(Alpha alpha, const GridSpec& grid) {
    if (classify_regime(alpha) == Regime::UniqueMinimum) {
        throw RegimeError("gap_profile: middle regime has no two-sided enclosure");
    }
    const BoundConstants c = endpoint_limits(alpha);
    const double coeff_gap = std::abs(c.at_one - c.at_zero);
    const double coeff_mid = 0.5 * (c.at_zero + c.at_one);
    constexpr double inf = std::numeric_limits<double>::infinity();

    GapProfile profile{alpha.value(), -inf, 0.0, 0.0};
    for (double x : grid.points()) {
        double gap = inf;
        double err = inf;
        try {
            const double ratio = shafer_ratio(x, alpha);
            gap = coeff_gap * std::abs(ratio);
            err = std::abs(coeff_mid * ratio - oracle_arcsin(x));
        } catch (const PoleError&) {
        }
        // Strict comparison keeps the smallest x on ties.
        if (gap > profile.max_gap) {
            profile.max_gap = gap;
            profile.argmax_x = x;
        }
        if (err > profile.midpoint_max_abs_error) {
            profile.midpoint_max_abs_error = err;
        }
    }
    return profile;
}

double solve_alpha_star_by_bisection(double tol, double lo, double hi) {
    if (!(tol > 0.0 && tol <= 1e-10)) {
        throw DomainError("solve_alpha_star_by_bisection: tol must lie in (0, 1e-10]");
    }
    if (!(lo < hi)) {
        throw ConvergenceError("solve_alpha_star_by_bisection: empty bracket");
    }
    double f_lo = h_limit_at_one(Alpha{lo});
    const double f_hi = h_limit_at_one(Alpha{hi});
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw ConvergenceError("solve_alpha_star_by_bisection: no sign change on bracket");
    }
    for (int i = 0; i < 200; ++i) {
        if (hi - lo <= tol) {
            return 0.5 * (lo + hi);
        }
        const double mid = 0.5 * (lo + hi);
        const double f_mid = h_limit_at_one(Alpha{mid});
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("solve_alpha_star_by_bisection: iteration cap reached");
}

std::pair<double, double> sharpness_probe(Alpha alpha, double eps) {
    if (!(eps > 0.0 && eps <= 1e-4)) {
        throw DomainError("sharpness_probe: eps must lie in (0, 1e-4]");
    }
    const BoundConstants c = endpoint_limits(alpha);
    return {f_alpha(eps, alpha) - c.at_zero, c.at_one - f_alpha(1.0 - eps, alpha)};
}

}  // namespace shafer
