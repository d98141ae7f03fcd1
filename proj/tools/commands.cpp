#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <vector>

#include "shafer/analysis.hpp"
#include "shafer/bounds.hpp"
#include "shafer/errors.hpp"
#include "shafer/format.hpp"
#include "shafer/oracle.hpp"
#include "shafer/verify.hpp"
#include "sweep_csv.hpp"

namespace shafer::cli {

namespace {

std::string sig17(double v) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

void field(std::ostream& out, const char* name, const std::string& value) {
    out << name;
    for (std::size_t n = std::char_traits<char>::length(name); n < 14; ++n) out << ' ';
    out << value << '\n';
}

std::vector<double> bench_inputs(std::size_t n) {
    std::mt19937_64 rng(kBenchSeed);
    std::vector<double> xs(n);
    // Midpoints of the 2^53 equal cells of [0,1): never 0, never 1.
    for (double& x : xs) x = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
    return xs;
}

template <typename Kernel>
double median_ns_per_op(const std::vector<double>& xs, Kernel kernel) {
    volatile double sink = 0.0;
    const std::size_t warm = std::min<std::size_t>(1000, xs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < warm; ++i) acc += kernel(xs[i]);
    sink = acc;

    std::array<double, kBenchRepeats> runs{};
    for (double& run : runs) {
        acc = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        for (double x : xs) acc += kernel(x);
        const auto t1 = std::chrono::steady_clock::now();
        sink = acc;
        run = std::chrono::duration<double, std::nano>(t1 - t0).count() /
              static_cast<double>(xs.size());
    }
    (void)sink;
    std::sort(runs.begin(), runs.end());
    return runs[runs.size() / 2];
}

}  // namespace

BenchResult run_bench(std::size_t iters) {
    if (iters < kBenchMinIters) {
        throw DomainError("bench: --iters must be at least 1000");
    }
    // Forces the oracle's self-validation before anything is timed.
    (void)oracle_status();

    const std::vector<double> xs = bench_inputs(iters);
    const Alpha four{4.0};

    BenchResult r;
    r.iters = iters;
    r.ns_bounds = median_ns_per_op(
        xs, [four](double x) { return lower_bound(x, four) + upper_bound(x, four); });
    r.ns_midpoint = median_ns_per_op(xs, [four](double x) { return enclosure_midpoint(x, four); });
    r.ns_asin = median_ns_per_op(xs, [](double x) { return std::asin(x); });

    for (double x : xs) {
        r.midpoint_max_abs_error =
            std::max(r.midpoint_max_abs_error, std::abs(enclosure_midpoint(x, four) - oracle_arcsin(x)));
    }
    return r;
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
    if (!std::isfinite(opts.alpha)) {
        err << "eval: alpha must be finite\n";
        return kExitUsage;
    }
    if (!(opts.x > 0.0 && opts.x < 1.0)) {
        err << "eval: x must lie in (0, 1), got " << format_real(opts.x) << '\n';
        return kExitUsage;
    }
    const Alpha alpha{opts.alpha};
    try {
        const Enclosure e = enclosure(opts.x, alpha);
        const double arc = oracle_arcsin(opts.x);
        field(out, "x", sig17(opts.x));
        field(out, "alpha", sig17(opts.alpha));
        field(out, "arcsin", sig17(arc));
        field(out, "regime", std::string(to_string(classify_regime(alpha))));
        field(out, "lower", e.lower ? sig17(*e.lower) : "");
        field(out, "upper", e.upper ? sig17(*e.upper) : "");
        field(out, "f_alpha", sig17(f_alpha(opts.x, alpha)));
        field(out, "margin_lower", e.lower ? sig17(arc - *e.lower) : "");
        field(out, "margin_upper", e.upper ? sig17(*e.upper - arc) : "");
    } catch (const PoleError& ex) {
        err << "eval: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    if (!(std::isfinite(opts.alpha_min) && std::isfinite(opts.alpha_max)) ||
        !(opts.alpha_min < opts.alpha_max)) {
        err << "sweep: need finite --alpha-min < --alpha-max\n";
        return kExitUsage;
    }
    if (opts.steps < 2 || opts.grid < 2) {
        err << "sweep: --steps and --grid must be at least 2\n";
        return kExitUsage;
    }

    std::vector<SweepRecord> rows;
    rows.reserve(opts.steps);
    for (double a : sweep_alphas(opts.alpha_min, opts.alpha_max, opts.steps)) {
        rows.push_back(make_sweep_record(Alpha{a}, opts.grid));
    }

    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "sweep: cannot open '" << opts.out_path << "' for writing\n";
        return kExitIo;
    }
    write_sweep_csv(file, rows);
    file.flush();
    if (!file) {
        err << "sweep: write to '" << opts.out_path << "' failed\n";
        return kExitIo;
    }
    out << "wrote " << rows.size() << " rows to " << opts.out_path << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.suite == opts.alpha.has_value()) {
        err << "verify: give exactly one of --alpha or --suite\n";
        return kExitUsage;
    }
    if (!(opts.tol > 0.0)) {
        err << "verify: --tol must be positive\n";
        return kExitUsage;
    }
    if (opts.alpha && !std::isfinite(*opts.alpha)) {
        err << "verify: alpha must be finite\n";
        return kExitUsage;
    }
    GridSpec grid;
    grid.n_uniform = opts.grid;
    try {
        grid.validate();
    } catch (const DomainError& e) {
        err << "verify: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::vector<Alpha> alphas = opts.suite ? suite_alphas() : std::vector<Alpha>{Alpha{*opts.alpha}};
    const std::vector<VerificationReport> reports = run_verification(alphas, grid, opts.tol);

    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const VerificationReport& r : reports) {
        if (r.skipped) {
            ++skipped;
            out << "SKIPPED(pole) " << r.claim_id << "  " << r.note << '\n';
            continue;
        }
        (r.passed ? passed : failed)++;
        out << (r.passed ? "PASS " : "FAIL ") << r.claim_id << "  worst_margin=" << sig17(r.worst_margin)
            << " at x=" << sig17(r.worst_x) << "  points=" << r.points_checked
            << "  tol=" << format_real(r.tolerance_used);
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
    }
    out << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_minimize(const MinimizeOptions& opts, std::ostream& out, std::ostream& err) {
    if (!std::isfinite(opts.alpha)) {
        err << "minimize: alpha must be finite\n";
        return kExitUsage;
    }
    const Alpha alpha{opts.alpha};
    if (classify_regime(alpha) != Regime::UniqueMinimum) {
        err << "minimize: alpha=" << format_real(opts.alpha) << " is in regime "
            << to_string(classify_regime(alpha)) << "; need " << format_real(alpha_star())
            << " < alpha < 4\n";
        return kExitUsage;
    }
    if (!(opts.xtol > 0.0 && opts.xtol <= 1e-6)) {
        err << "minimize: --xtol must lie in (0, 1e-6]\n";
        return kExitUsage;
    }
    try {
        const MinimumResult m = find_interior_minimum(alpha, opts.xtol);
        const BoundConstants c = endpoint_limits(alpha);
        field(out, "alpha", sig17(opts.alpha));
        field(out, "x_min", sig17(m.x_min));
        field(out, "f_min", sig17(m.f_min));
        field(out, "iterations", std::to_string(m.iterations));
        field(out, "bracket_width", sig17(m.bracket_width));
        field(out, "const_at_zero", sig17(c.at_zero));
        field(out, "const_at_one", sig17(c.at_one));
    } catch (const ConvergenceError& e) {
        err << "minimize: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.iters < kBenchMinIters) {
        err << "bench: --iters must be at least " << kBenchMinIters << '\n';
        return kExitUsage;
    }
    const BenchResult r = run_bench(opts.iters);
    field(out, "iters", std::to_string(r.iters));
    field(out, "seed", "0x5AFE");
    field(out, "bounds_ns", sig17(r.ns_bounds));
    field(out, "midpoint_ns", sig17(r.ns_midpoint));
    field(out, "asin_ns", sig17(r.ns_asin));
    field(out, "midpoint_err", sig17(r.midpoint_max_abs_error));
    return kExitOk;
}

}  // namespace shafer::cli
