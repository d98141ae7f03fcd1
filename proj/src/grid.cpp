#include "shafer/grid.hpp"

#include <algorithm>
#include <cmath>

#include "shafer/errors.hpp"

namespace shafer {

void GridSpec::validate() const {
    if (n_uniform < 2) {
        throw DomainError("GridSpec: n_uniform must be at least 2");
    }
    if (!(endpoint_margin > 0.0 && endpoint_margin < 0.5)) {
        throw DomainError("GridSpec: endpoint_margin must lie in (0, 0.5)");
    }
    if (n_log_endpoint > 0 && !(log_floor > 0.0 && log_floor < endpoint_margin)) {
        throw DomainError("GridSpec: log_floor must lie in (0, endpoint_margin)");
    }
}

GridSpec GridSpec::uniform(std::size_t n) {
    GridSpec g;
    g.n_uniform = n;
    g.n_log_endpoint = 0;
    return g;
}

std::vector<double> GridSpec::points() const {
    validate();
    std::vector<double> xs;
    xs.reserve(n_uniform + 2 * n_log_endpoint);

    const double lo = endpoint_margin;
    const double span = 1.0 - 2.0 * endpoint_margin;
    const double last = static_cast<double>(n_uniform - 1);
    for (std::size_t i = 0; i + 1 < n_uniform; ++i) {
        xs.push_back(lo + span * (static_cast<double>(i) / last));
    }
    xs.push_back(1.0 - endpoint_margin);

    // k = 0 lands on log_floor; the top exponent (== endpoint_margin) is left to the uniform part.
    const double log_lo = std::log10(log_floor);
    const double log_hi = std::log10(endpoint_margin);
    for (std::size_t k = 0; k < n_log_endpoint; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n_log_endpoint);
        const double d = std::pow(10.0, log_lo + (log_hi - log_lo) * t);
        xs.push_back(d);
        xs.push_back(1.0 - d);
    }

    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs.erase(std::remove_if(xs.begin(), xs.end(), [](double x) { return !(x > 0.0 && x < 1.0); }),
             xs.end());
    return xs;
}

}  // namespace shafer
