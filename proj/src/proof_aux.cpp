#include "shafer/proof_aux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "shafer/errors.hpp"

namespace shafer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kBracketPoleRelTol = 1e-12;

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0, 1), got " + std::to_string(x));
    }
}

double checked_bracket(const SqrtTerms& t, double alpha) {
    const double bracket = t.alpha_times_sum_plus_four(alpha);
    const double scale = std::abs(2.0 * alpha + 4.0) + std::abs(alpha) * t.two_minus_sum;
    if (!(std::abs(bracket) > kBracketPoleRelTol * scale)) {
        throw PoleError("h_alpha: alpha*(sqrt(1-x)+sqrt(1+x)) + 4 vanishes at x = " +
                        std::to_string(t.x) + " for alpha = " + std::to_string(alpha));
    }
    return bracket;
}

double conditioning(double a, double b, double result) {
    const double mag = std::abs(a) + std::abs(b);
    if (result == 0.0) return mag == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return std::max(1.0, mag / std::abs(result));
}

}  // namespace

double p_fn(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("p_fn: x must lie in [0, 1], got " + std::to_string(x));
    }
    const SqrtTerms t = sqrt_terms(x);
    return -2.0 * x * x * x / (t.sum * (1.0 + t.r));
}

double g_fn(double x) {
    require_open_unit(x, "g_fn");
    const SqrtTerms t = sqrt_terms(x);
    return -2.0 * (1.0 + t.r) / t.sum;
}

double h_bracket(double x, Alpha alpha) {
    require_open_unit(x, "h_bracket");
    return sqrt_terms(x).alpha_times_sum_plus_four(alpha.value());
}

bool in_h_pole_band(Alpha alpha) noexcept {
    return alpha.value() > -2.0 * kSqrt2 && alpha.value() < -2.0;
}

AuxValue h_eval(double x, Alpha alpha) {
    require_open_unit(x, "h_fn");
    const double a = alpha.value();
    const SqrtTerms t = sqrt_terms(x);
    const double bracket = checked_bracket(t, a);
    const double rational = 4.0 * x * t.alpha_plus_sum(a) / (t.sum * bracket);
    const double arc = std::asin(x);
    const double h = rational - arc;
    return {h, conditioning(rational, arc, h)};
}

double h_fn(double x, Alpha alpha) { return h_eval(x, alpha).value; }

double h_limit_at_one(Alpha alpha) {
    const double a = alpha.value();
    const double denom = 2.0 * kSqrt2 * a + 8.0;
    if (!(std::abs(denom) > 1e-14 * 8.0)) {
        throw PoleError("h_limit_at_one: pole at alpha = -2 sqrt2");
    }
    return (8.0 - 4.0 * kPi - kSqrt2 * (kPi - 4.0) * a) / denom;
}

AuxValue big_f_eval(double x, Alpha alpha) {
    require_open_unit(x, "big_f_fn");
    const double a = alpha.value();
    const SqrtTerms t = sqrt_terms(x);
    const double rational = 4.0 * x * t.alpha_plus_sum(a) / t.sum;
    const double arc_term = t.alpha_times_sum_plus_four(a) * std::asin(x);
    const double f = rational - arc_term;
    return {f, conditioning(rational, arc_term, f)};
}

double big_f_fn(double x, Alpha alpha) { return big_f_eval(x, alpha).value; }

std::pair<double, double> discriminants(Alpha alpha) noexcept {
    const double a = alpha.value();
    return {a * a - 2.0 * a - 8.0, a * a - kSqrt2 * a - 8.0};
}

}  // namespace shafer
