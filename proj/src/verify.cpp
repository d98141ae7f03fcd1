#include "shafer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "shafer/errors.hpp"
#include "shafer/format.hpp"
#include "shafer/oracle.hpp"
#include "shafer/proof_aux.hpp"

namespace shafer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = std::numbers::sqrt2;

// Running minimum of margins; NaN counts as -inf, ties keep the smaller x
// because points arrive in ascending order.
class MarginTracker {
public:
    void add(double margin, double x) {
        ++count_;
        if (std::isnan(margin)) margin = -kInf;
        if (margin < worst_) {
            worst_ = margin;
            worst_x_ = x;
        }
    }
    void merge(double margin, double x) {
        if (std::isnan(margin)) margin = -kInf;
        if (margin < worst_ || (margin == worst_ && x < worst_x_)) {
            worst_ = margin;
            worst_x_ = x;
        }
    }
    void set_count(std::size_t n) { count_ = n; }

    [[nodiscard]] double worst() const { return worst_; }
    [[nodiscard]] double worst_x() const { return worst_x_; }
    [[nodiscard]] std::size_t count() const { return count_; }

private:
    double worst_ = kInf;
    double worst_x_ = 0.0;
    std::size_t count_ = 0;
};

VerificationReport make_report(std::string id, const MarginTracker& t, double tol,
                               std::string note = {}) {
    VerificationReport r;
    r.claim_id = std::move(id);
    r.worst_margin = t.worst();
    r.worst_x = t.worst_x();
    r.points_checked = t.count();
    r.tolerance_used = tol;
    r.passed = r.worst_margin > -tol;
    r.note = std::move(note);
    return r;
}

VerificationReport make_skipped(std::string id, std::string note) {
    VerificationReport r;
    r.claim_id = std::move(id);
    r.skipped = true;
    r.passed = false;
    r.worst_margin = std::numeric_limits<double>::quiet_NaN();
    r.worst_x = std::numeric_limits<double>::quiet_NaN();
    r.note = std::move(note);
    return r;
}

double relative_gap(double above, double below) {
    const double scale = std::max(std::abs(above), std::abs(below));
    if (scale == 0.0) return 0.0;
    return (above - below) / scale;
}

std::string with_alpha(const std::string& id, Alpha alpha) {
    return id + "[alpha=" + format_real(alpha.value()) + "]";
}

// x in (0,1) where alpha*S(x) + 4 = 0, for alpha in the pole band.
double bracket_pole_location(double alpha) {
    const double s = -4.0 / alpha;
    const double r = 0.5 * s * s - 1.0;
    return std::sqrt(std::max(0.0, (1.0 - r) * (1.0 + r)));
}

std::string pole_note(Alpha alpha) {
    return "pole: alpha*(sqrt(1-x)+sqrt(1+x))+4 = 0 at x~" +
           format_real(bracket_pole_location(alpha.value())) + "; route through F_alpha";
}

// Magnitude of the terms that cancelled to give v; an exact zero stays zero.
double aux_scale(const AuxValue& v) {
    return v.value == 0.0 ? 0.0 : std::abs(v.value) * v.conditioning;
}

enum class SignPattern { Positive, Negative, NegativeThenPositive };

std::optional<SignPattern> expected_h_sign(Alpha alpha) {
    const double a = alpha.value();
    if (in_h_pole_band(alpha)) return std::nullopt;
    switch (classify_regime(alpha)) {
        case Regime::StrictlyIncreasing: return SignPattern::Positive;
        case Regime::UniqueMinimum: return SignPattern::NegativeThenPositive;
        case Regime::StrictlyDecreasing:
            return a >= -2.0 ? SignPattern::Negative : SignPattern::Positive;
    }
    return std::nullopt;
}

// Shape of h_alpha from the sign range of alpha^2 - 8 + alpha*g, g in (-2, -sqrt2).
Shape expected_h_shape(Alpha alpha) {
    const double a = alpha.value();
    const auto [d1, d2] = discriminants(alpha);
    if (a > 0.0) {
        if (d1 >= 0.0) return Shape::Increasing;
        if (d2 <= 0.0) return Shape::Decreasing;
        return Shape::Valley;
    }
    if (a == 0.0) return Shape::Decreasing;
    if (d1 <= 0.0) return Shape::Decreasing;
    if (d2 >= 0.0) return Shape::Increasing;
    return Shape::Peak;
}

std::string_view to_string(Shape s) {
    switch (s) {
        case Shape::Increasing: return "increasing";
        case Shape::Decreasing: return "decreasing";
        case Shape::Valley: return "unique minimum";
        case Shape::Peak: return "unique maximum";
    }
    return "?";
}

VerificationReport shape_report(std::string id, std::span<const double> xs,
                                std::span<const double> ys, std::span<const double> scales,
                                Shape shape, double tol) {
    const ShapeAssessment a = assess_shape(xs, ys, scales, shape, tol);
    MarginTracker t;
    t.merge(a.worst_margin, a.worst_x);
    t.set_count(xs.size());
    std::string note = std::string(to_string(shape)) +
                       ", significant sign changes: " + std::to_string(a.sign_changes);
    if (shape == Shape::Valley || shape == Shape::Peak) {
        note += ", turning point x=" + format_real(xs[a.turning_index]);
    }
    return make_report(std::move(id), t, tol, std::move(note));
}

// Closeness claim: passes iff |value - target| < tol.
VerificationReport closeness_report(std::string id, double x, double value, double target,
                                    double tol) {
    MarginTracker t;
    t.add(-std::abs(value - target), x);
    return make_report(std::move(id), t, tol,
                       "value " + format_real(value) + " vs " + format_real(target));
}

void append_alpha_lemmas(std::vector<VerificationReport>& out, const std::vector<double>& xs,
                         Alpha alpha, double tol) {
    const double a = alpha.value();
    const std::size_t n = xs.size();

    std::vector<double> big_f(n);
    std::vector<double> big_f_scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        const AuxValue v = big_f_eval(xs[i], alpha);
        big_f[i] = v.value;
        big_f_scale[i] = aux_scale(v);
    }

    const bool h_band = in_h_pole_band(alpha);
    std::vector<double> h(n);
    std::vector<double> h_scale(n);
    if (!h_band) {
        for (std::size_t i = 0; i < n; ++i) {
            const AuxValue v = h_eval(xs[i], alpha);
            h[i] = v.value;
            h_scale[i] = aux_scale(v);
        }
    }

    // h_sign
    const std::string h_sign_id = with_alpha("h_sign", alpha);
    if (h_band) {
        out.push_back(make_skipped(h_sign_id, pole_note(alpha)));
    } else {
        const SignPattern pattern = *expected_h_sign(alpha);
        MarginTracker t;
        std::string note;
        if (pattern == SignPattern::NegativeThenPositive) {
            std::size_t k = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (h[i] > tol * h_scale[i]) {
                    k = i;
                    break;
                }
            }
            bool negative_before = false;
            for (std::size_t i = 0; i < n; ++i) {
                const double m = (i < k ? -h[i] : h[i]) / std::max(h_scale[i], 1e-300);
                if (i < k && -h[i] > tol * h_scale[i]) negative_before = true;
                t.add(m, xs[i]);
            }
            if (k == n || !negative_before) {
                t.merge(-kInf, k == n ? xs.back() : xs.front());
                note = "no negative-to-positive crossing";
            } else {
                note = "negative then positive, crossing near x=" + format_real(xs[k]);
            }
        } else {
            const double s = pattern == SignPattern::Positive ? 1.0 : -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                t.add(s * h[i] / std::max(h_scale[i], 1e-300), xs[i]);
            }
            note = pattern == SignPattern::Positive ? "h > 0" : "h < 0";
        }
        out.push_back(make_report(h_sign_id, t, tol, note));
    }

    // h_shape
    const std::string h_shape_id = with_alpha("h_shape", alpha);
    if (h_band) {
        out.push_back(make_skipped(h_shape_id, pole_note(alpha)));
    } else {
        out.push_back(shape_report(h_shape_id, xs, h, h_scale, expected_h_shape(alpha), tol));
    }

    // h limits at both ends
    const std::string h_zero_id = with_alpha("h_limit_at_zero", alpha);
    const std::string h_one_id = with_alpha("h_limit_at_one", alpha);
    if (h_band) {
        out.push_back(make_skipped(h_zero_id, pole_note(alpha)));
        out.push_back(make_skipped(h_one_id, pole_note(alpha)));
    } else {
        constexpr double x0 = 1e-6;
        out.push_back(closeness_report(h_zero_id, x0, h_fn(x0, alpha), 0.0, kHLimitZeroTol));
        constexpr double x1 = 1.0 - 1e-10;
        try {
            out.push_back(closeness_report(h_one_id, x1, h_fn(x1, alpha), h_limit_at_one(alpha),
                                           kHLimitOneTol));
        } catch (const PoleError& e) {
            out.push_back(make_skipped(h_one_id, e.what()));
        }
    }

    // F/h identity: F = (alpha S + 4) h
    const std::string identity_id = with_alpha("F_h_identity", alpha);
    if (h_band) {
        out.push_back(make_skipped(identity_id, pole_note(alpha)));
    } else {
        MarginTracker t;
        for (std::size_t i = 0; i < n; ++i) {
            const double product = h_bracket(xs[i], alpha) * h[i];
            t.add(-std::abs(big_f[i] - product) / (1.0 + std::abs(big_f[i])), xs[i]);
        }
        out.push_back(make_report(identity_id, t, kIdentityTol, "F = (alpha*S+4)*h"));
    }

    // F claims for alpha <= 0
    if (a <= 0.0) {
        MarginTracker neg;
        for (std::size_t i = 0; i < n; ++i) {
            neg.add(-big_f[i] / std::max(big_f_scale[i], 1e-300), xs[i]);
        }
        out.push_back(make_report(with_alpha("F_negative", alpha), neg, tol, "F < 0"));
        out.push_back(shape_report(with_alpha("F_decreasing", alpha), xs, big_f, big_f_scale,
                                   Shape::Decreasing, tol));
    }

    // sign(f') == sign(F) by central differences
    {
        constexpr double step_floor = 1e-6;
        constexpr double eps = std::numeric_limits<double>::epsilon();
        MarginTracker t;
        std::size_t used = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = xs[i];
            const double step = std::max(step_floor, step_floor * x);
            if (x <= 10.0 * step || x >= 1.0 - 10.0 * step) continue;
            if (!(std::abs(big_f[i]) > kBridgeMinMagnitude)) continue;
            const double fp = f_alpha(x + step, alpha);
            const double fm = f_alpha(x - step, alpha);
            const double fd = (fp - fm) / (2.0 * step);
            const double noise =
                4.0 * eps * std::max({1.0, std::abs(fp), std::abs(fm)}) / (2.0 * step);
            const double s = big_f[i] > 0.0 ? 1.0 : -1.0;
            t.add(s * fd / noise, x);
            ++used;
        }
        t.set_count(used);
        out.push_back(make_report(with_alpha("sign_bridge", alpha), t, 1.0,
                                  "sign of central difference of f vs sign of F, in units of "
                                  "difference noise"));
    }
}

}  // namespace

std::vector<Alpha> suite_alphas() {
    return {Alpha{-5.0}, Alpha{-2.5}, Alpha{-2.0}, Alpha{0.0},  Alpha{2.0},
            Alpha{3.7},  Alpha{3.76}, Alpha{3.8},  Alpha{alpha_malesevic()},
            Alpha{3.99}, Alpha{4.0},  Alpha{5.0},  Alpha{10.0}};
}

VerificationReport check_oracle_integrity() {
    const OracleStatus& s = oracle_status();
    MarginTracker t;
    t.add(-s.max_residual, s.worst_x);
    t.set_count(s.samples);
    VerificationReport r = make_report("oracle_round_trip", t, s.tolerance,
                                       s.platform_ok ? "platform asin"
                                                     : "platform asin rejected; bisection fallback");
    // The claim is |residual| <= tol, inclusive.
    r.passed = s.max_residual <= s.tolerance;
    return r;
}

VerificationReport check_inequality_chain(const GridSpec& grid, double tol) {
    const Alpha four{4.0};
    MarginTracker t;
    for (double x : grid.points()) {
        const double arc = oracle_arcsin(x);
        const double lower = lower_bound(x, four);
        const double classic = classic_shafer_second(x);
        t.add(std::min(relative_gap(arc, lower), relative_gap(lower, classic)), x);
    }
    return make_report("shafer_chain", t, tol, "asin x > 6B(x;4) > 3x/(2+sqrt(1-x^2))");
}

VerificationReport check_theorem2(Alpha alpha, const GridSpec& grid, double tol) {
    const Regime regime = classify_regime(alpha);
    MarginTracker t;
    std::size_t poles = 0;
    for (double x : grid.points()) {
        Enclosure e;
        try {
            e = enclosure(x, alpha);
        } catch (const PoleError&) {
            ++poles;
            continue;
        }
        const double arc = oracle_arcsin(x);
        double m = relative_gap(*e.upper, arc);
        if (e.lower) m = std::min(m, relative_gap(arc, *e.lower));
        t.add(m, x);
    }
    std::string id;
    std::string note;
    switch (regime) {
        case Regime::StrictlyIncreasing:
            id = "bound_two_sided";
            note = "(2+a)B < asin x < c1 B";
            break;
        case Regime::StrictlyDecreasing:
            id = "bound_reversed";
            note = "asin x strictly between c1 B and (2+a)B";
            break;
        case Regime::UniqueMinimum:
            id = "bound_mid_upper";
            note = "asin x < max(c0, c1) B";
            break;
    }
    if (poles > 0) note += "; " + std::to_string(poles) + " grid points on a pole of B skipped";
    return make_report(with_alpha(id, alpha), t, tol, note);
}

VerificationReport check_monotonicity(Alpha alpha, const GridSpec& grid, double tol) {
    const std::vector<double> xs = grid.points();
    std::vector<double> fs(xs.size());
    std::vector<double> scales(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fs[i] = f_alpha(xs[i], alpha);
        scales[i] = std::max(1.0, std::abs(fs[i]));
    }
    switch (classify_regime(alpha)) {
        case Regime::StrictlyIncreasing:
            return shape_report(with_alpha("monotone_increasing", alpha), xs, fs, scales,
                                Shape::Increasing, tol);
        case Regime::StrictlyDecreasing:
            return shape_report(with_alpha("monotone_decreasing", alpha), xs, fs, scales,
                                Shape::Decreasing, tol);
        case Regime::UniqueMinimum:
            return shape_report(with_alpha("monotone_unique_minimum", alpha), xs, fs, scales,
                                Shape::Valley, tol);
    }
    return {};
}

std::vector<VerificationReport> check_proof_lemmas(const GridSpec& grid,
                                                   std::span<const Alpha> alphas, double tol) {
    const std::vector<double> xs = grid.points();
    const std::size_t n = xs.size();
    std::vector<VerificationReport> out;

    // p: p(0) = 0 exactly, p(1) = -sqrt2 within one ulp.
    {
        const double p0 = p_fn(0.0);
        const double p1 = p_fn(1.0);
        const double ulps = std::abs(p1 + kSqrt2) / (std::nextafter(kSqrt2, 2.0) - kSqrt2);
        MarginTracker t;
        t.add(p0 == 0.0 ? 0.0 : -kInf, 0.0);
        t.add(-ulps, 1.0);
        out.push_back(make_report("p_endpoints", t, 1.5,
                                  "p(0)=" + format_real(p0) + ", p(1)=" + format_real(p1) +
                                      " (margin in ulps)"));
    }

    std::vector<double> p(n);
    std::vector<double> g(n);
    const std::vector<double> ones(n, 1.0);
    {
        MarginTracker neg;
        MarginTracker range;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = p_fn(xs[i]);
            g[i] = g_fn(xs[i]);
            neg.add(-p[i], xs[i]);
            range.add(std::min(g[i] + 2.0, -kSqrt2 - g[i]), xs[i]);
        }
        out.push_back(make_report("p_negative", neg, kLemmaAbsTol, "p < 0"));
        out.push_back(shape_report("p_decreasing", xs, p, ones, Shape::Decreasing, kLemmaAbsTol));
        out.push_back(shape_report("g_increasing", xs, g, ones, Shape::Increasing, kLemmaAbsTol));
        out.push_back(make_report("g_range", range, kLemmaAbsTol, "-2 < g < -sqrt2"));
    }
    out.push_back(closeness_report("g_limit_at_zero", 1e-4, g_fn(1e-4), -2.0, kGLimitTol));
    out.push_back(closeness_report("g_limit_at_one", 1.0 - 1e-8, g_fn(1.0 - 1e-8), -kSqrt2,
                                   kGLimitTol));

    for (const Alpha alpha : alphas) {
        append_alpha_lemmas(out, xs, alpha, tol);
    }
    return out;
}

std::vector<VerificationReport> run_verification(std::span<const Alpha> alphas,
                                                 const GridSpec& grid, double tol) {
    std::vector<VerificationReport> out;
    out.push_back(check_oracle_integrity());
    out.push_back(check_inequality_chain(grid, tol));
    for (const Alpha alpha : alphas) {
        out.push_back(check_theorem2(alpha, grid, tol));
        out.push_back(check_monotonicity(alpha, grid, tol));
    }
    auto lemmas = check_proof_lemmas(grid, alphas, tol);
    out.insert(out.end(), std::make_move_iterator(lemmas.begin()),
               std::make_move_iterator(lemmas.end()));
    return out;
}

bool all_passed(std::span<const VerificationReport> reports) noexcept {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.skipped || r.passed; });
}

ShapeAssessment assess_shape(std::span<const double> xs, std::span<const double> ys,
                             std::span<const double> scales, Shape shape, double tol) {
    const std::size_t n = ys.size();
    if (xs.size() != n || scales.size() != n) {
        throw DomainError("assess_shape: xs, ys and scales must have equal length");
    }
    ShapeAssessment out{kInf, n > 0 ? xs[0] : 0.0, 0, 0};
    if (n < 2) return out;

    std::size_t turn = 0;
    if (shape == Shape::Valley || shape == Shape::Peak) {
        for (std::size_t i = 1; i < n; ++i) {
            const bool better = shape == Shape::Valley ? ys[i] < ys[turn] : ys[i] > ys[turn];
            if (better) turn = i;
        }
        out.turning_index = turn;
    }

    MarginTracker t;
    int last_sign = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double scale = std::max({scales[i], scales[i + 1], 1e-300});
        const double rel = (ys[i + 1] - ys[i]) / scale;
        double direction = 1.0;
        switch (shape) {
            case Shape::Increasing: direction = 1.0; break;
            case Shape::Decreasing: direction = -1.0; break;
            case Shape::Valley: direction = i < turn ? -1.0 : 1.0; break;
            case Shape::Peak: direction = i < turn ? 1.0 : -1.0; break;
        }
        t.add(direction * rel, xs[i]);
        if (std::abs(rel) > tol) {
            const int sign = rel > 0.0 ? 1 : -1;
            if (last_sign != 0 && sign != last_sign) ++out.sign_changes;
            last_sign = sign;
        }
    }
    if ((shape == Shape::Valley || shape == Shape::Peak) && (turn == 0 || turn == n - 1)) {
        t.merge(-kInf, xs[turn]);
    }
    out.worst_margin = t.worst();
    out.worst_x = t.worst_x();
    return out;
}

}  // namespace shafer
