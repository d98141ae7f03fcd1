// Acceptance gate: one PASS/FAIL line per criterion.
//
//   shafer_acceptance            run all criteria
//   shafer_acceptance 3 7        run only criteria 3 and 7
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "shafer/analysis.hpp"
#include "shafer/bounds.hpp"
#include "shafer/grid.hpp"
#include "shafer/oracle.hpp"
#include "shafer/proof_aux.hpp"
#include "shafer/verify.hpp"
#include "sweep_csv.hpp"

using namespace shafer;

namespace {

// Tolerances, fixed here and nowhere else.
constexpr double kRelSlack = 1e-12;
constexpr double kChainSeconds = 2.0;
constexpr double kProbeTol = 1e-6;
constexpr double kEndpointEqualityTol = 1e-12;
constexpr double kAlphaStarTol = 1e-12;
constexpr double kHLimitZeroTol = 1e-15;
constexpr double kGTol = 1e-3;
constexpr double kHRefValue = 0.0149893;
constexpr double kHRefTol = 1e-6;
constexpr double kMidMinCeiling = 5.8764417;
constexpr double kContinuityTol = 1e-3;
constexpr double kContinuityDistance = 1e-4;
constexpr double kGapRef = 3.571e-3;
constexpr double kGapTol = 1e-5;
constexpr double kMidpointErrCeiling = 1.79e-3;
constexpr double kArgmaxNearOne = 0.99;
constexpr double kRoundTripTol = 1e-15;
constexpr std::size_t kRoundTripPoints = 10000;
constexpr double kSuiteSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "NOT ") + what;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string alpha_name(double a) {
    return a == alpha_malesevic() ? std::string("alpha_M") : fmt(a);
}

Outcome criterion_1() {
    Outcome o;
    const auto t0 = Clock::now();
    const VerificationReport r = check_inequality_chain(GridSpec{}, kRelSlack);
    const double secs = seconds_since(t0);
    o.require(r.points_checked == 100065, "100065 points (" + std::to_string(r.points_checked) + ")");
    o.require(r.passed, "chain holds, worst margin " + fmt(r.worst_margin));
    o.require(secs < kChainSeconds, "runtime " + fmt(secs) + " s < 2 s");
    return o;
}

Outcome criterion_2() {
    Outcome o;
    for (double a : {4.0, 5.0, 10.0, -5.0, -2.0, 0.0, 2.0, 3.7}) {
        const VerificationReport r = check_theorem2(Alpha{a}, GridSpec{}, kRelSlack);
        const bool reversed = a < 4.0;
        const bool right_claim =
            r.claim_id.rfind(reversed ? "bound_reversed" : "bound_two_sided", 0) == 0;
        o.require(r.passed && right_claim, r.claim_id + " worst " + fmt(r.worst_margin));
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    for (double a : {3.77, 3.8, alpha_malesevic(), 3.95, 3.99}) {
        const Alpha alpha{a};
        const BoundConstants c = endpoint_limits(alpha);
        const double k = std::max(c.at_zero, c.at_one);
        double worst = INFINITY;
        for (double x : GridSpec{}.points()) {
            const double arc = oracle_arcsin(x);
            const double up = k * shafer_ratio(x, alpha);
            worst = std::min(worst, (up - arc) / std::max(std::abs(up), std::abs(arc)));
        }
        o.require(worst > -kRelSlack, "alpha=" + alpha_name(a) + " worst " + fmt(worst));
    }
    return o;
}

// Signs of consecutive differences of f_alpha over the grid, ignoring
// differences at rounding level.
struct DiffSigns {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t changes = 0;
    int first = 0;
    int last = 0;
};

DiffSigns diff_signs(Alpha alpha) {
    const std::vector<double> xs = GridSpec{}.points();
    DiffSigns s;
    double prev = f_alpha(xs[0], alpha);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = f_alpha(xs[i], alpha);
        const double d = cur - prev;
        const double noise = kRelSlack * std::max({1.0, std::abs(cur), std::abs(prev)});
        prev = cur;
        if (std::abs(d) <= noise) continue;
        const int sign = d > 0 ? 1 : -1;
        (sign > 0 ? s.positive : s.negative)++;
        if (s.last != 0 && sign != s.last) ++s.changes;
        if (s.first == 0) s.first = sign;
        s.last = sign;
    }
    return s;
}

Outcome criterion_4() {
    Outcome o;
    for (double a : {4.0, 5.0, 10.0}) {
        const DiffSigns s = diff_signs(Alpha{a});
        o.require(s.negative == 0 && s.positive > 0, "alpha=" + fmt(a) + " increasing");
    }
    for (double a : {-5.0, -2.5, -2.0, 0.0, 2.0, 3.76}) {
        const DiffSigns s = diff_signs(Alpha{a});
        o.require(s.positive == 0 && s.negative > 0, "alpha=" + fmt(a) + " decreasing");
    }
    for (double a : {3.8, alpha_malesevic(), 3.99}) {
        const DiffSigns s = diff_signs(Alpha{a});
        o.require(s.changes == 1 && s.first < 0 && s.last > 0,
                  "alpha=" + alpha_name(a) + " one -/+ change (" + std::to_string(s.changes) + ")");
    }
    return o;
}

Outcome criterion_5() {
    Outcome o;
    for (double a : {0.0, 4.0, 10.0}) {
        const auto [at_zero, at_one] = sharpness_probe(Alpha{a}, 1e-8);
        o.require(std::abs(at_zero) < kProbeTol && std::abs(at_one) < kProbeTol,
                  "alpha=" + fmt(a) + " probe (" + fmt(at_zero) + ", " + fmt(at_one) + ") < 1e-6");
    }
    for (double a : {-5.0, 0.0, 4.0, 10.0, alpha_malesevic()}) {
        const double closed = std::numbers::pi * (std::numbers::sqrt2 + a) / (2 * std::numbers::sqrt2);
        o.require(f_alpha(1.0, Alpha{a}) == closed, "f(1)=closed form bitwise at alpha=" + alpha_name(a));
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    const double am = alpha_malesevic();
    const double formula = (4 - std::numbers::pi) * std::numbers::sqrt2 / (std::numbers::pi - 2 * std::numbers::sqrt2);
    const double d = std::abs((2 + am) - std::numbers::pi * (std::numbers::sqrt2 + am) / (2 * std::numbers::sqrt2));
    o.require(d <= kEndpointEqualityTol, "|c0 - c1| = " + fmt(d) + " at alpha_M = " + fmt(am));
    o.require(std::abs(am - formula) <= 1e-14, "alpha_M matches its closed form");
    return o;
}

Outcome criterion_7() {
    Outcome o;
    const double formula = 4 * (std::numbers::pi - 2) / (std::numbers::sqrt2 * (4 - std::numbers::pi));
    const double root = solve_alpha_star_by_bisection(1e-12);
    o.require(std::abs(root - formula) <= kAlphaStarTol,
              "bisection " + fmt(root) + " vs closed form, diff " + fmt(std::abs(root - formula)));
    const double lim = h_limit_at_one(Alpha{alpha_star()});
    o.require(std::abs(lim) <= kHLimitZeroTol, "h_limit_at_one(alpha*) = " + fmt(lim));
    return o;
}

// Signs near x = 0 are judged against the size of the cancelling terms, with
// the same relative slack as every strict inequality here.
Outcome criterion_8() {
    Outcome o;
    o.require(p_fn(0.0) == 0.0, "p(0) = 0");
    const double ulp = std::nextafter(std::numbers::sqrt2, 2.0) - std::numbers::sqrt2;
    o.require(std::abs(p_fn(1.0) + std::numbers::sqrt2) <= ulp, "p(1) = -sqrt2 to 1 ulp");

    const std::vector<Alpha> alphas{Alpha{-5}, Alpha{-2.5}, Alpha{-1}, Alpha{0}, Alpha{4}};
    const std::vector<VerificationReport> reports = check_proof_lemmas(GridSpec{}, alphas, kRelSlack);
    const auto report = [&](const std::string& id) {
        for (const VerificationReport& r : reports) {
            if (r.claim_id == id) {
                o.require(r.passed, id + " worst " + fmt(r.worst_margin));
                return;
            }
        }
        o.require(false, id + " present");
    };
    for (const char* id : {"p_negative", "p_decreasing", "g_increasing"}) report(id);
    o.require(std::abs(g_fn(1e-4) + 2) <= kGTol, "g(1e-4) near -2");
    o.require(std::abs(g_fn(1 - 1e-8) + std::numbers::sqrt2) <= kGTol, "g(1-1e-8) near -sqrt2");
    report("h_sign[alpha=4]");
    report("h_sign[alpha=0]");
    const double h = h_fn(1 - 1e-10, Alpha{4});
    o.require(std::abs(h - kHRefValue) <= kHRefTol, "h(1-1e-10, 4) = " + fmt(h));
    for (const char* id : {"F_negative[alpha=-5]", "F_negative[alpha=-2.5]", "F_negative[alpha=-1]",
                           "F_negative[alpha=0]"}) {
        report(id);
    }
    return o;
}

Outcome criterion_9() {
    Outcome o;
    const MinimumResult m = find_interior_minimum(Alpha{alpha_malesevic()}, 1e-10);
    o.require(m.f_min < kMidMinCeiling, "f_min(alpha_M) = " + fmt(m.f_min) + " at x = " + fmt(m.x_min));
    const double near_four = find_interior_minimum(Alpha{4 - kContinuityDistance}, 1e-10).f_min;
    o.require(std::abs(near_four - 6) <= kContinuityTol, "f_min(4-1e-4) = " + fmt(near_four));
    const double as = alpha_star();
    const double near_star = find_interior_minimum(Alpha{as + kContinuityDistance}, 1e-10).f_min;
    const double target = endpoint_limits(Alpha{as}).at_one;
    o.require(std::abs(near_star - target) <= kContinuityTol,
              "f_min(alpha*+1e-4) = " + fmt(near_star) + " vs " + fmt(target));
    return o;
}

Outcome criterion_10() {
    Outcome o;
    const GapProfile g = gap_profile(Alpha{4}, GridSpec{});
    o.require(std::abs(g.max_gap - kGapRef) <= kGapTol, "max_gap = " + fmt(g.max_gap));
    o.require(g.argmax_x > kArgmaxNearOne, "argmax x = " + fmt(g.argmax_x));
    o.require(g.midpoint_max_abs_error <= kMidpointErrCeiling,
              "midpoint error = " + fmt(g.midpoint_max_abs_error));
    return o;
}

Outcome criterion_11() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t i = 0; i < kRoundTripPoints; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(kRoundTripPoints - 1);
        worst = std::max(worst, std::abs(std::sin(oracle_arcsin(x)) - x));
    }
    o.require(worst <= kRoundTripTol, "max |sin(asin x) - x| = " + fmt(worst));
    o.require(check_oracle_integrity().passed, "built-in integrity check");
    return o;
}

Outcome criterion_12() {
    Outcome o;
    const auto t0 = Clock::now();

    std::ostringstream sink, err;
    cli::VerifyOptions v;
    v.suite = true;
    const int code = cli::cmd_verify(v, sink, err);
    o.require(code == cli::kExitOk, "verify --suite exit " + std::to_string(code));

    const auto path = std::filesystem::temp_directory_path() / "shafer_acceptance_sweep.csv";
    cli::SweepOptions s;
    s.out_path = path.string();
    bool round_trip = cli::cmd_sweep(s, sink, err) == cli::kExitOk;
    if (round_trip) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream original;
        original << in.rdbuf();
        std::istringstream parse(original.str());
        std::ostringstream rewritten;
        cli::write_sweep_csv(rewritten, cli::read_sweep_csv(parse));
        round_trip = rewritten.str() == original.str();
    }
    std::filesystem::remove(path);
    o.require(round_trip, "sweep CSV round-trips byte-identically");

    const cli::BenchResult b1 = cli::run_bench(20000);
    const cli::BenchResult b2 = cli::run_bench(20000);
    o.require(b1.midpoint_max_abs_error == b2.midpoint_max_abs_error && b1.seed == b2.seed,
              "bench deterministic (error " + fmt(b1.midpoint_max_abs_error) + ")");

    const double secs = seconds_since(t0);
    o.require(secs < kSuiteSeconds, "wall clock " + fmt(secs) + " s < 60 s");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria{
        criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty()) {
        for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) selected.push_back(n);
    }

    bool all = true;
    for (int n : selected) {
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::printf("criterion %2d: %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
