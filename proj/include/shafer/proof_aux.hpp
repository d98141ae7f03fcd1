#pragma once

// Auxiliary functions from the monotonicity argument for f_alpha.
//
// With S = sqrt(1+x) + sqrt(1-x) and r = sqrt(1-x^2):
//
//   f_alpha'(x) = (alpha S + 4) r / (4 (1-x^2) (1-r)) * h_alpha(x)
//               =               r / (4 (1-x^2) (1-r)) * F_alpha(x)
//   h_alpha'(x) ∝ alpha^2 - 8 + alpha g(x)     (positive factor)
//   g'(x)       ∝ -p(x)                          (positive factor)
//
// The displayed quotients cancel heavily near x = 0; every function here is
// evaluated through an equivalent closed form with no subtractive loss in its
// rational part:
//
//   p(x)       = -2 x^3 / (S (1 + r))
//   g(x)       = -2 (1 + r) / S
//   h_alpha(x) = 4x (alpha + S) / (S (alpha S + 4)) - arcsin x
//   F_alpha(x) = 4x (alpha + S) / S - (alpha S + 4) arcsin x

#include <utility>

#include "shafer/bounds.hpp"

namespace shafer {

/// A value together with an estimate of how strongly rounding in its inputs
/// is amplified (the ratio of the magnitudes of the cancelling terms to the
/// result). Always >= 1.
struct AuxValue {
    double value;
    double conditioning;
};

/// p(x) on [0, 1]; p(0) = 0 and p(1) = -sqrt2. DomainError outside [0, 1].
[[nodiscard]] double p_fn(double x);

/// g(x) on (0, 1), strictly increasing from -2 to -sqrt2.
[[nodiscard]] double g_fn(double x);

/// alpha S + 4, the factor whose zeros are the poles of h_alpha. Vanishes
/// inside (0,1) exactly for -2 sqrt2 < alpha < -2.
[[nodiscard]] double h_bracket(double x, Alpha alpha);

/// True when alpha S(x) + 4 has a zero for some x in (0, 1).
[[nodiscard]] bool in_h_pole_band(Alpha alpha) noexcept;

/// h_alpha(x) on (0, 1). PoleError when alpha S + 4 vanishes to working precision.
[[nodiscard]] double h_fn(double x, Alpha alpha);
[[nodiscard]] AuxValue h_eval(double x, Alpha alpha);

/// (8 - 4 pi - sqrt2 (pi - 4) alpha) / (2 sqrt2 alpha + 8). PoleError at alpha = -2 sqrt2.
[[nodiscard]] double h_limit_at_one(Alpha alpha);

/// F_alpha(x) on (0, 1); finite for every alpha.
[[nodiscard]] double big_f_fn(double x, Alpha alpha);
[[nodiscard]] AuxValue big_f_eval(double x, Alpha alpha);

/// (alpha^2 - 2 alpha - 8, alpha^2 - sqrt2 alpha - 8).
[[nodiscard]] std::pair<double, double> discriminants(Alpha alpha) noexcept;

}  // namespace shafer
