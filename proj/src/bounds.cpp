#include "shafer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shafer/errors.hpp"

namespace shafer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
// Low-order parts: pi = kPi + kPiLo, sqrt2 = kSqrt2 + kSqrt2Lo to ~32 digits.
constexpr double kPiLo = 1.2246467991473532e-16;
constexpr double kSqrt2Lo = -9.667293313452913e-17;

// |alpha + S| below this fraction of |alpha + 2| + (2 - S) is treated as a pole.
constexpr double kRatioPoleRelTol = 1e-14;

void require_half_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0, 1], got " + std::to_string(x));
    }
}

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0, 1), got " + std::to_string(x));
    }
}

double ratio_unchecked_domain(const SqrtTerms& t, double alpha) {
    const double denom = t.alpha_plus_sum(alpha);
    const double scale = std::abs(alpha + 2.0) + t.two_minus_sum;
    if (!(std::abs(denom) > kRatioPoleRelTol * scale)) {
        throw PoleError("shafer_ratio: alpha + sqrt(1+x) + sqrt(1-x) vanishes at x = " +
                        std::to_string(t.x) + " for alpha = " + std::to_string(alpha));
    }
    return t.diff / denom;
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw DomainError("alpha must be finite");
    }
}

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::StrictlyIncreasing: return "StrictlyIncreasing";
        case Regime::StrictlyDecreasing: return "StrictlyDecreasing";
        case Regime::UniqueMinimum: return "UniqueMinimum";
    }
    return "?";
}

std::optional<Regime> parse_regime(std::string_view text) noexcept {
    for (auto r : {Regime::StrictlyIncreasing, Regime::StrictlyDecreasing, Regime::UniqueMinimum}) {
        if (text == to_string(r)) return r;
    }
    return std::nullopt;
}

std::string_view to_string(BoundConstant constant) noexcept {
    switch (constant) {
        case BoundConstant::AtZero: return "at_zero";
        case BoundConstant::AtOne: return "at_one";
        case BoundConstant::MidMax: return "mid_max";
    }
    return "?";
}

// pi - 2, 4 - pi and pi - 2 sqrt2 are exact in the high parts (Sterbenz), so
// adding the low parts afterwards recovers the digits lost to cancellation.
double alpha_star() noexcept {
    const double pi_minus_two = (kPi - 2.0) + kPiLo;
    const double four_minus_pi = (4.0 - kPi) - kPiLo;
    return 4.0 * pi_minus_two / (kSqrt2 * four_minus_pi);
}

double alpha_malesevic() noexcept {
    const double four_minus_pi = (4.0 - kPi) - kPiLo;
    const double pi_minus_two_sqrt2 = (kPi - 2.0 * kSqrt2) + (kPiLo - 2.0 * kSqrt2Lo);
    return four_minus_pi * kSqrt2 / pi_minus_two_sqrt2;
}

double h_regime_root() noexcept { return (kSqrt2 + std::sqrt(34.0)) / 2.0; }

SqrtTerms sqrt_terms(double x) noexcept {
    SqrtTerms t{};
    t.x = x;
    t.s_plus = std::sqrt(1.0 + x);
    t.s_minus = std::sqrt(1.0 - x);
    t.sum = t.s_plus + t.s_minus;
    t.diff = 2.0 * x / t.sum;
    t.r = t.s_plus * t.s_minus;
    t.two_minus_sum = 2.0 * x * x / (t.sum * (1.0 + t.s_plus) * (1.0 + t.s_minus));
    return t;
}

double shafer_ratio(double x, Alpha alpha) {
    require_half_open_unit(x, "shafer_ratio");
    return ratio_unchecked_domain(sqrt_terms(x), alpha.value());
}

double f_alpha(double x, Alpha alpha) {
    require_half_open_unit(x, "f_alpha");
    if (x == 1.0) {
        return endpoint_limits(alpha).at_one;
    }
    const SqrtTerms t = sqrt_terms(x);
    return t.alpha_plus_sum(alpha.value()) * (t.sum * std::asin(x)) / (2.0 * x);
}

Regime classify_regime(Alpha alpha) noexcept {
    const double a = alpha.value();
    if (a >= 4.0) return Regime::StrictlyIncreasing;
    if (a <= alpha_star()) return Regime::StrictlyDecreasing;
    return Regime::UniqueMinimum;
}

BoundConstants endpoint_limits(Alpha alpha) noexcept {
    const double a = alpha.value();
    const double at_zero = 2.0 + a;
    const double at_one = kPi * (kSqrt2 + a) / (2.0 * kSqrt2);
    return {at_zero, at_one, std::max(at_zero, at_one)};
}

double lower_bound(double x, Alpha alpha) {
    require_open_unit(x, "lower_bound");
    if (classify_regime(alpha) != Regime::StrictlyIncreasing) {
        throw RegimeError("lower_bound: requires alpha >= 4; use enclosure() for other alpha");
    }
    return endpoint_limits(alpha).at_zero * shafer_ratio(x, alpha);
}

double upper_bound(double x, Alpha alpha) {
    require_open_unit(x, "upper_bound");
    if (classify_regime(alpha) != Regime::StrictlyIncreasing) {
        throw RegimeError("upper_bound: requires alpha >= 4; use enclosure() for other alpha");
    }
    return endpoint_limits(alpha).at_one * shafer_ratio(x, alpha);
}

double mid_regime_upper_bound(double x, Alpha alpha) {
    require_open_unit(x, "mid_regime_upper_bound");
    if (classify_regime(alpha) != Regime::UniqueMinimum) {
        throw RegimeError("mid_regime_upper_bound: requires alpha_star < alpha < 4");
    }
    return endpoint_limits(alpha).mid_max * shafer_ratio(x, alpha);
}

double classic_shafer_second(double x) {
    require_open_unit(x, "classic_shafer_second");
    const double r = std::sqrt((1.0 - x) * (1.0 + x));
    return 3.0 * x / (2.0 + r);
}

Enclosure enclosure(double x, Alpha alpha) {
    require_open_unit(x, "enclosure");
    const Regime regime = classify_regime(alpha);
    const BoundConstants c = endpoint_limits(alpha);
    const double ratio = shafer_ratio(x, alpha);

    Enclosure e;
    if (regime == Regime::UniqueMinimum) {
        e.upper = c.mid_max * ratio;
        e.upper_source = BoundSource{regime, BoundConstant::MidMax};
        return e;
    }

    double below = c.at_zero * ratio;
    double above = c.at_one * ratio;
    BoundConstant below_src = BoundConstant::AtZero;
    BoundConstant above_src = BoundConstant::AtOne;
    if (below > above) {
        std::swap(below, above);
        std::swap(below_src, above_src);
    }
    e.lower = below;
    e.upper = above;
    e.lower_source = BoundSource{regime, below_src};
    e.upper_source = BoundSource{regime, above_src};
    return e;
}

double enclosure_midpoint(double x, Alpha alpha) {
    require_open_unit(x, "enclosure_midpoint");
    if (classify_regime(alpha) == Regime::UniqueMinimum) {
        throw RegimeError("enclosure_midpoint: middle regime has no two-sided enclosure");
    }
    const BoundConstants c = endpoint_limits(alpha);
    return 0.5 * (c.at_zero + c.at_one) * shafer_ratio(x, alpha);
}

}  // namespace shafer
