#pragma once

// Two-sided bounds for arcsin built from the Shafer ratio
//
//     B(x; alpha) = (sqrt(1+x) - sqrt(1-x)) / (alpha + sqrt(1+x) + sqrt(1-x))
//
// and the function f_alpha(x) = arcsin(x) / B(x; alpha) on (0, 1]. Depending on
// alpha, f_alpha is strictly increasing, strictly decreasing, or has a single
// interior minimum; its endpoint limits 2+alpha (x -> 0+) and
// pi(sqrt2+alpha)/(2 sqrt2) (x -> 1-) are the best constants c with
// c*B(x; alpha) bounding arcsin x from either side.
//
// All functions are pure and thread-safe.

#include <compare>
#include <optional>
#include <string_view>

namespace shafer {

/// Shape parameter of the bound family. Always finite.
class Alpha {
public:
    /// Throws DomainError for NaN or infinite input.
    explicit Alpha(double value);

    [[nodiscard]] double value() const noexcept { return value_; }

    friend auto operator<=>(const Alpha&, const Alpha&) = default;

private:
    double value_;
};

/// Monotonicity of f_alpha on (0, 1].
enum class Regime {
    StrictlyIncreasing,  ///< alpha >= 4
    StrictlyDecreasing,  ///< alpha <= alpha_star()
    UniqueMinimum,       ///< alpha_star() < alpha < 4
};

[[nodiscard]] std::string_view to_string(Regime regime) noexcept;
[[nodiscard]] std::optional<Regime> parse_regime(std::string_view text) noexcept;

/// Which best constant multiplies B(x; alpha) on one side of an enclosure.
enum class BoundConstant {
    AtZero,  ///< 2 + alpha
    AtOne,   ///< pi (sqrt2 + alpha) / (2 sqrt2)
    MidMax,  ///< max of the two, middle regime only
};

struct BoundSource {
    Regime regime;
    BoundConstant constant;

    friend bool operator==(const BoundSource&, const BoundSource&) = default;
};

[[nodiscard]] std::string_view to_string(BoundConstant constant) noexcept;

struct Enclosure {
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<BoundSource> lower_source;
    std::optional<BoundSource> upper_source;

    [[nodiscard]] bool two_sided() const noexcept { return lower && upper; }
};

struct BoundConstants {
    double at_zero;  ///< lim_{x->0+} f_alpha(x) = 2 + alpha
    double at_one;   ///< lim_{x->1-} f_alpha(x) = f_alpha(1)
    double mid_max;
};

/// 4(pi-2) / (sqrt2 (4-pi)) ~ 3.7615144: the largest alpha with f_alpha decreasing.
[[nodiscard]] double alpha_star() noexcept;

/// (4-pi) sqrt2 / (pi - 2 sqrt2) ~ 3.8764525: the alpha at which both endpoint limits coincide.
[[nodiscard]] double alpha_malesevic() noexcept;

/// (sqrt2 + sqrt34) / 2 ~ 3.6225827: positive root of alpha^2 - sqrt2 alpha - 8.
[[nodiscard]] double h_regime_root() noexcept;

/// Square-root building blocks shared by the bounds and the proof's auxiliary
/// functions. Differences that cancel near x = 0 are carried in closed form.
struct SqrtTerms {
    double x;
    double s_plus;    ///< sqrt(1+x)
    double s_minus;   ///< sqrt(1-x)
    double sum;       ///< S = s_plus + s_minus, in [sqrt2, 2]
    double diff;      ///< s_plus - s_minus = 2x / S
    double r;         ///< sqrt(1-x^2) = s_plus * s_minus
    double two_minus_sum;  ///< 2 - S = 2x^2 / (S (1+s_plus) (1+s_minus)) >= 0

    /// alpha + S, evaluated as (alpha + 2) - (2 - S).
    [[nodiscard]] double alpha_plus_sum(double alpha) const noexcept {
        return (alpha + 2.0) - two_minus_sum;
    }
    /// alpha S + 4, evaluated as (2 alpha + 4) - alpha (2 - S).
    [[nodiscard]] double alpha_times_sum_plus_four(double alpha) const noexcept {
        return (2.0 * alpha + 4.0) - alpha * two_minus_sum;
    }
};

/// Requires 0 <= x <= 1 (not checked).
[[nodiscard]] SqrtTerms sqrt_terms(double x) noexcept;

/// B(x; alpha) for x in (0, 1].
///
/// Throws DomainError outside (0, 1] and PoleError where alpha + S vanishes to
/// working precision (possible only for -2 < alpha <= -sqrt2).
[[nodiscard]] double shafer_ratio(double x, Alpha alpha);

/// f_alpha(x) = arcsin(x) / B(x; alpha) on (0, 1]. Evaluated in the product
/// form (alpha + S) S arcsin(x) / (2x), so it is defined for every alpha. At
/// x = 1 it returns endpoint_limits(alpha).at_one bit for bit.
[[nodiscard]] double f_alpha(double x, Alpha alpha);

[[nodiscard]] Regime classify_regime(Alpha alpha) noexcept;

[[nodiscard]] BoundConstants endpoint_limits(Alpha alpha) noexcept;

/// (2+alpha) B(x; alpha) < arcsin x. Requires alpha >= 4 (RegimeError) and x in (0,1).
[[nodiscard]] double lower_bound(double x, Alpha alpha);

/// pi (sqrt2+alpha)/(2 sqrt2) B(x; alpha) > arcsin x. Requires alpha >= 4 and x in (0,1).
[[nodiscard]] double upper_bound(double x, Alpha alpha);

/// max(2+alpha, pi (sqrt2+alpha)/(2 sqrt2)) B(x; alpha) > arcsin x for
/// alpha_star < alpha < 4 (RegimeError otherwise).
[[nodiscard]] double mid_regime_upper_bound(double x, Alpha alpha);

/// 3x / (2 + sqrt(1-x^2)), the weaker classical lower bound. x in (0,1).
[[nodiscard]] double classic_shafer_second(double x);

/// Certified enclosure of arcsin x for any finite alpha.
///
/// In both monotone regimes f_alpha lies strictly between the two endpoint
/// constants, so arcsin x lies strictly between c0*B and c1*B; the smaller of
/// the two is reported as `lower`. For alpha > -sqrt2 this is exactly the
/// pairing of the classical statement (swapped when f_alpha decreases); for
/// alpha <= -2, B < 0 and the swap is undone. In the middle regime only the
/// upper side exists.
[[nodiscard]] Enclosure enclosure(double x, Alpha alpha);

/// Midpoint of the two-sided enclosure, (c0 + c1)/2 * B(x; alpha). RegimeError
/// in the middle regime.
[[nodiscard]] double enclosure_midpoint(double x, Alpha alpha);

}  // namespace shafer
