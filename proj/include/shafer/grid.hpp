#pragma once

#include <cstddef>
#include <vector>

namespace shafer {

/// Sampling plan over (0, 1): a uniform grid on [m, 1-m] plus log-spaced
/// points approaching each endpoint from m down to `log_floor`.
struct GridSpec {
    std::size_t n_uniform = 100001;
    double endpoint_margin = 1e-8;
    std::size_t n_log_endpoint = 32;
    double log_floor = 1e-12;

    /// Throws DomainError unless n_uniform >= 2, 0 < endpoint_margin < 0.5 and,
    /// when log points are requested, 0 < log_floor < endpoint_margin.
    void validate() const;

    /// Sorted, duplicate-free points, all strictly inside (0, 1).
    [[nodiscard]] std::vector<double> points() const;

    /// Uniform-only grid of n points on [1e-8, 1-1e-8].
    [[nodiscard]] static GridSpec uniform(std::size_t n);
};

}  // namespace shafer
