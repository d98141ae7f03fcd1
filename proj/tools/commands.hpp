#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace shafer::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

struct EvalOptions {
    double alpha = 4.0;
    double x = 0.5;
};

struct SweepOptions {
    double alpha_min = 3.5;
    double alpha_max = 4.1;
    std::size_t steps = 7;
    std::size_t grid = 10001;
    std::string out_path;
};

struct VerifyOptions {
    std::optional<double> alpha;
    bool suite = false;
    std::size_t grid = 100001;
    double tol = 1e-12;
};

struct MinimizeOptions {
    double alpha = 3.8;
    double xtol = 1e-10;
};

inline constexpr std::uint64_t kBenchSeed = 0x5AFE;
inline constexpr std::size_t kBenchMinIters = 1000;
inline constexpr int kBenchRepeats = 5;

struct BenchOptions {
    std::size_t iters = 1000000;
};

struct BenchResult {
    std::size_t iters = 0;
    std::uint64_t seed = kBenchSeed;
    double ns_bounds = 0.0;    ///< lower + upper at alpha = 4, per input
    double ns_midpoint = 0.0;
    double ns_asin = 0.0;
    double midpoint_max_abs_error = 0.0;
};

/// Times the three kernels (median of kBenchRepeats runs after a 1000-iteration
/// warm-up) over inputs drawn from mt19937_64 seeded with kBenchSeed.
/// Requires iters >= kBenchMinIters.
[[nodiscard]] BenchResult run_bench(std::size_t iters);

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_minimize(const MinimizeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace shafer::cli
