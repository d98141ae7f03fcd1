#pragma once

#include <utility>

#include "shafer/bounds.hpp"
#include "shafer/golden_section.hpp"
#include "shafer/grid.hpp"

namespace shafer {

struct GapProfile {
    double alpha;
    double max_gap;                 ///< max over the grid of upper - lower
    double argmax_x;
    double midpoint_max_abs_error;  ///< max |midpoint - arcsin x| over the grid
};

inline constexpr double kSearchLowerEdge = 1e-9;
inline constexpr int kMaxSearchIterations = 200;

/// Minimum of f_alpha on [1e-9, 1] for alpha_star < alpha < 4.
///
/// RegimeError outside the middle regime, DomainError unless 0 < x_tol <= 1e-6,
/// ConvergenceError if the iteration cap is hit.
[[nodiscard]] MinimumResult find_interior_minimum(Alpha alpha, double x_tol);

/// Same search over a caller-supplied bracket inside (0, 1].
[[nodiscard]] MinimumResult find_interior_minimum(Alpha alpha, double x_tol, double lo, double hi);

/// Largest c with c * B(x; alpha) <= arcsin x on (0, 1) in the middle regime,
/// i.e. the interior minimum of f_alpha (searched to x_tol = 1e-10).
[[nodiscard]] double sharpened_mid_lower_constant(Alpha alpha);

/// Width of the two-sided enclosure over `grid` and the accuracy of its
/// midpoint. RegimeError in the middle regime. A grid point sitting on a pole
/// of B yields an infinite gap.
[[nodiscard]] GapProfile gap_profile(Alpha alpha, const GridSpec& grid);

/// Root of h_limit_at_one on [lo, hi] by bisection, to bracket width <= tol.
///
/// DomainError unless 0 < tol <= 1e-10; ConvergenceError for a bracket that is
/// empty, has no sign change, or fails to shrink within 200 halvings.
[[nodiscard]] double solve_alpha_star_by_bisection(double tol, double lo = 3.0, double hi = 4.0);

/// (f_alpha(eps) - (2+alpha), pi(sqrt2+alpha)/(2 sqrt2) - f_alpha(1-eps)).
/// DomainError unless 0 < eps <= 1e-4.
[[nodiscard]] std::pair<double, double> sharpness_probe(Alpha alpha, double eps);

}  // namespace shafer
