#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "shafer/bounds.hpp"

namespace shafer::cli {

/// One row of an alpha sweep. max_gap is present iff the regime is monotone;
/// x_min / f_min are present iff it is UniqueMinimum.
struct SweepRecord {
    double alpha = 0.0;
    Regime regime = Regime::StrictlyIncreasing;
    double const_at_zero = 0.0;
    double const_at_one = 0.0;
    std::optional<double> max_gap;
    std::optional<double> x_min;
    std::optional<double> f_min;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline constexpr const char* kSweepHeader = "alpha,regime,const_at_zero,const_at_one,max_gap,x_min,f_min";

/// x_tol used for the middle-regime rows.
inline constexpr double kSweepMinimizerTol = 1e-10;

/// `steps` values from lo to hi inclusive, ascending.
[[nodiscard]] std::vector<double> sweep_alphas(double lo, double hi, std::size_t steps);

/// Evaluates one row; the gap uses a uniform grid of `grid_points` points.
[[nodiscard]] SweepRecord make_sweep_record(Alpha alpha, std::size_t grid_points);

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows);

/// Parses a file produced by write_sweep_csv. Throws std::runtime_error with
/// the offending line number on malformed input.
[[nodiscard]] std::vector<SweepRecord> read_sweep_csv(std::istream& in);

}  // namespace shafer::cli
