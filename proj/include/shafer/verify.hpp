#pragma once

// Grid-based verification of the inequalities, monotonicity statements and
// proof lemmas for the Shafer bound family.
//
// Every check walks a GridSpec in ascending x and reduces to one
// VerificationReport: the smallest margin seen (ties resolved toward smaller x)
// and where it occurred. A claim passes iff worst_margin > -tolerance_used.
// Margins of strict inequalities are relative, (a - b) / max(|a|, |b|), so a
// pass certifies the inequality up to the stated slack in binary64.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shafer/bounds.hpp"
#include "shafer/grid.hpp"

namespace shafer {

struct VerificationReport {
    std::string claim_id;
    bool passed = false;
    bool skipped = false;
    double worst_margin = 0.0;
    double worst_x = 0.0;
    std::size_t points_checked = 0;
    double tolerance_used = 0.0;
    std::string note;
};

/// Default relative slack for strict inequalities.
inline constexpr double kStrictSlack = 1e-12;
/// Absolute slack for the sign and monotonicity of p and g.
inline constexpr double kLemmaAbsTol = 1e-14;
/// |g(1e-4) + 2| and |g(1 - 1e-8) + sqrt2| bounds.
inline constexpr double kGLimitTol = 1e-3;
/// |h(1 - 1e-10) - h_limit_at_one| bound.
inline constexpr double kHLimitOneTol = 1e-4;
/// |h(1e-6)| bound.
inline constexpr double kHLimitZeroTol = 1e-5;
/// |F - (alpha S + 4) h| <= tol (1 + |F|).
inline constexpr double kIdentityTol = 1e-10;
/// Sign-bridge points need |F| above this.
inline constexpr double kBridgeMinMagnitude = 1e-8;

/// The fixed alpha list of the built-in suite:
/// {-5, -2.5, -2, 0, 2, 3.7, 3.76, 3.8, alpha_M, 3.99, 4, 5, 10}.
[[nodiscard]] std::vector<Alpha> suite_alphas();

/// Round trip |sin(oracle_arcsin(x)) - x| <= 1e-15 over 10^4 points of [0, 1].
[[nodiscard]] VerificationReport check_oracle_integrity();

/// arcsin x > lower_bound(x, 4) > classic_shafer_second(x) on the grid.
[[nodiscard]] VerificationReport check_inequality_chain(const GridSpec& grid,
                                                        double tol = kStrictSlack);

/// The case of the bound theorem that applies to alpha: two-sided enclosure
/// in both monotone regimes (see enclosure()), upper side only in between.
/// Grid points on a pole of B are skipped and counted in the note.
[[nodiscard]] VerificationReport check_theorem2(Alpha alpha, const GridSpec& grid,
                                                double tol = kStrictSlack);

/// Consecutive differences of f_alpha have the regime's sign (relative to
/// max(1, |f|)); in the middle regime f decreases up to an interior grid
/// argmin and increases after it.
[[nodiscard]] VerificationReport check_monotonicity(Alpha alpha, const GridSpec& grid,
                                                    double tol = kStrictSlack);

/// One report per lemma of the monotonicity proof. Alpha-independent claims
/// (p, g) come first, then for each alpha: h_sign, h_shape, h_limit_at_zero,
/// h_limit_at_one, F_h_identity, sign_bridge, and for alpha <= 0 F_negative
/// and F_decreasing. h-based claims are reported as skipped for alpha in the
/// pole band (-2 sqrt2, -2).
[[nodiscard]] std::vector<VerificationReport> check_proof_lemmas(const GridSpec& grid,
                                                                 std::span<const Alpha> alphas,
                                                                 double tol = kStrictSlack);

/// Oracle integrity, the inequality chain, then check_theorem2 and
/// check_monotonicity for each alpha, then check_proof_lemmas.
[[nodiscard]] std::vector<VerificationReport> run_verification(std::span<const Alpha> alphas,
                                                               const GridSpec& grid,
                                                               double tol = kStrictSlack);

/// True iff no non-skipped report failed.
[[nodiscard]] bool all_passed(std::span<const VerificationReport> reports) noexcept;

enum class Shape { Increasing, Decreasing, Valley, Peak };

struct ShapeAssessment {
    double worst_margin;
    double worst_x;
    std::size_t turning_index;   ///< argmin (Valley) / argmax (Peak); 0 otherwise
    std::size_t sign_changes;    ///< among differences exceeding tol * scale
};

/// Checks that ys (sampled at ascending xs) has `shape`. Each difference
/// ys[i+1]-ys[i] is normalized by max(scales[i], scales[i+1]). A Valley/Peak
/// whose turning point is the first or last sample gets margin -infinity.
[[nodiscard]] ShapeAssessment assess_shape(std::span<const double> xs, std::span<const double> ys,
                                           std::span<const double> scales, Shape shape, double tol);

}  // namespace shafer
