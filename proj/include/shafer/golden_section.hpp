#pragma once

#include <cmath>
#include <string>

#include "shafer/errors.hpp"

namespace shafer {

struct MinimumResult {
    double x_min;
    double f_min;
    int iterations;
    double bracket_width;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi].
///
/// Shrinks the bracket until its width is <= x_tol. The reported point is the
/// best of the two interior probes and the two final bracket ends, so f_min
/// never exceeds f at either end of the returned bracket.
template <typename F>
MinimumResult golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                      int max_iterations = 200) {
    if (!(lo < hi)) {
        throw DomainError("golden_section_minimize: empty bracket");
    }
    if (!(x_tol > 0.0)) {
        throw DomainError("golden_section_minimize: x_tol must be positive");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int iterations = 0;

    while (b - a > x_tol) {
        if (iterations == max_iterations) {
            throw ConvergenceError("golden_section_minimize: no convergence after " +
                                   std::to_string(max_iterations) + " iterations");
        }
        ++iterations;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }

    MinimumResult best{c, fc, iterations, b - a};
    if (fd < best.f_min) {
        best.x_min = d;
        best.f_min = fd;
    }
    for (double end : {a, b}) {
        const double fe = f(end);
        if (fe < best.f_min) {
            best.x_min = end;
            best.f_min = fe;
        }
    }
    return best;
}

}  // namespace shafer
