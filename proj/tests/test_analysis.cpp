#include <doctest.h>

#include <cmath>

#include "hp_oracle.hpp"
#include "shafer/analysis.hpp"
#include "shafer/bounds.hpp"
#include "shafer/errors.hpp"
#include "shafer/golden_section.hpp"
#include "shafer/grid.hpp"
#include "test_support.hpp"

using namespace shafer;
using testing::rel_diff;

namespace {

double ref_f(double x, double a) { return hp::to_double(hp::f(hp::Real(x), hp::Real(a))); }

struct KnownMinimum {
    double alpha;
    double x_min;
    double f_min;
};

}  // namespace

TEST_CASE("grid") {
    const std::vector<double> xs = GridSpec{}.points();
    CHECK(xs.size() == 100065);
    CHECK(xs.front() == doctest::Approx(1e-12).epsilon(1e-12));
    CHECK(1.0 - xs.back() == doctest::Approx(1e-12).epsilon(1e-3));
    for (std::size_t i = 1; i < xs.size(); ++i) REQUIRE(xs[i - 1] < xs[i]);
    CHECK(xs.back() < 1.0);

    const std::vector<double> u = GridSpec::uniform(11).points();
    CHECK(u.size() == 11);
    CHECK(u.front() == 1e-8);
    CHECK(u.back() == 1 - 1e-8);

    GridSpec bad;
    bad.n_uniform = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = GridSpec{};
    bad.log_floor = 1e-6;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("golden_section_minimize") {
    const auto quad = [](double x) { return (x - 0.3) * (x - 0.3) + 1; };
    const MinimumResult m = golden_section_minimize(quad, 0.0, 1.0, 1e-9);
    CHECK(m.x_min == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(m.f_min == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.bracket_width <= 1e-9);
    CHECK(m.iterations == 44);

    CHECK_THROWS_AS((void)golden_section_minimize(quad, 0.0, 1.0, 1e-9, 5), ConvergenceError);
    CHECK_THROWS_AS((void)golden_section_minimize(quad, 1.0, 1.0, 1e-9), DomainError);
    CHECK_THROWS_AS((void)golden_section_minimize(quad, 0.0, 1.0, 0.0), DomainError);

    // Minimum at an end of the bracket.
    const MinimumResult edge = golden_section_minimize([](double x) { return x; }, 0.0, 1.0, 1e-8);
    CHECK(edge.x_min <= 1e-8);
}

TEST_CASE("find_interior_minimum") {
    const KnownMinimum known[] = {
        {alpha_malesevic(), 0.900605058910606, 5.87315550374951},
        {3.8, 0.990711707787748, 5.79115656061464},
        {3.99, 0.311189729708281, 5.98997910694551},
        {3.77, 0.999574563037485, 5.75819491604781},
    };
    for (const KnownMinimum& k : known) {
        CAPTURE(k.alpha);
        const MinimumResult m = find_interior_minimum(Alpha{k.alpha}, 1e-10);
        CHECK(std::abs(m.x_min - k.x_min) <= 1e-6);
        CHECK(rel_diff(m.f_min, k.f_min) <= 1e-13);
        CHECK(rel_diff(m.f_min, ref_f(m.x_min, k.alpha)) <= 1e-14);
        CHECK(m.bracket_width <= 1e-10);
        const BoundConstants c = endpoint_limits(Alpha{k.alpha});
        CHECK(m.f_min < std::min(c.at_zero, c.at_one));
    }

    const MinimumResult am = find_interior_minimum(Alpha{alpha_malesevic()}, 1e-10);
    CHECK(am.f_min < 5.8764417);
    CHECK(am.iterations == 48);

    CHECK_THROWS_AS((void)find_interior_minimum(Alpha{4}, 1e-10), RegimeError);
    CHECK_THROWS_AS((void)find_interior_minimum(Alpha{3.7}, 1e-10), RegimeError);
    CHECK_THROWS_AS((void)find_interior_minimum(Alpha{3.8}, 1e-5), DomainError);
    CHECK_THROWS_AS((void)find_interior_minimum(Alpha{3.8}, 0.0), DomainError);
}

TEST_CASE("interior minimum does not depend on the bracket") {
    for (double a : {3.8, alpha_malesevic(), 3.99}) {
        const MinimumResult wide = find_interior_minimum(Alpha{a}, 1e-6, 1e-9, 1.0);
        const MinimumResult narrow = find_interior_minimum(Alpha{a}, 1e-6, 1e-6, 1 - 1e-9);
        CHECK_MESSAGE(std::abs(wide.x_min - narrow.x_min) <= 1e-5, "alpha=" << a);
    }
}

TEST_CASE("interior minimum approaches the regime boundaries") {
    const double near_four = find_interior_minimum(Alpha{4 - 1e-4}, 1e-10).f_min;
    CHECK(std::abs(near_four - 6) <= 1e-3);
    CHECK(near_four == doctest::Approx(5.99989999791661).epsilon(1e-12));

    const double as = alpha_star();
    const double near_star = find_interior_minimum(Alpha{as + 1e-4}, 1e-10).f_min;
    CHECK(std::abs(near_star - endpoint_limits(Alpha{as}).at_one) <= 1e-3);
    CHECK(near_star == doctest::Approx(5.7488994753422).epsilon(1e-10));

    double prev = 0.0;
    for (double a : {3.9, 3.99, 3.999, 3.9999}) {
        const double gap = 6 - sharpened_mid_lower_constant(Alpha{a});
        CHECK(gap > 0.0);
        if (prev > 0.0) CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("sharpened constant is a valid lower bound") {
    const Alpha a{alpha_malesevic()};
    const double c = sharpened_mid_lower_constant(a);
    for (double x : GridSpec::uniform(20001).points()) {
        const double arc = std::asin(x);
        REQUIRE((arc - c * shafer_ratio(x, a)) / arc > -1e-12);
    }
}

TEST_CASE("gap_profile") {
    const GapProfile g4 = gap_profile(Alpha{4}, GridSpec{});
    CHECK(g4.alpha == 4.0);
    CHECK(std::abs(g4.max_gap - 3.571e-3) <= 1e-5);
    CHECK(g4.max_gap == doctest::Approx(3.573077012448e-3).epsilon(1e-6));
    CHECK(g4.midpoint_max_abs_error <= 1.79e-3);
    CHECK(g4.midpoint_max_abs_error <= g4.max_gap / 2 + 1e-15);

    const GapProfile g0 = gap_profile(Alpha{0}, GridSpec{});
    CHECK(g0.max_gap == doctest::Approx(0.42920367320510338).epsilon(1e-6));

    const double last = GridSpec{}.points().back();
    for (double a : {0.0, 2.0, 3.7, 4.0, 5.0, 10.0}) {
        CHECK_MESSAGE(gap_profile(Alpha{a}, GridSpec{}).argmax_x == last, "alpha=" << a);
    }
    CHECK_THROWS_AS((void)gap_profile(Alpha{3.8}, GridSpec{}), RegimeError);
}

TEST_CASE("solve_alpha_star_by_bisection") {
    const double root = solve_alpha_star_by_bisection(1e-12);
    CHECK(std::abs(root - alpha_star()) <= 1e-12);
    CHECK(std::abs(root - hp::to_double(hp::alpha_star())) <= 1e-12);

    CHECK_THROWS_AS((void)solve_alpha_star_by_bisection(1e-12, 4, 4), ConvergenceError);
    CHECK_THROWS_AS((void)solve_alpha_star_by_bisection(1e-12, 4, 5), ConvergenceError);
    CHECK_THROWS_AS((void)solve_alpha_star_by_bisection(1e-9), DomainError);
    CHECK_THROWS_AS((void)solve_alpha_star_by_bisection(0.0), DomainError);
}

TEST_CASE("sharpness_probe") {
    const auto [zero4, one4] = sharpness_probe(Alpha{4}, 1e-8);
    CHECK(std::abs(zero4) < 1e-6);
    // The distance to the constant at one decays like sqrt(eps), not eps.
    const double ref_one4 = hp::to_double(hp::at_one(4) - hp::f(hp::Real(1 - 1e-8), 4));
    CHECK(rel_diff(one4, ref_one4) < 1e-7);
    CHECK(one4 == doctest::Approx(5.117198714076e-6).epsilon(1e-6));

    const auto [zero0, one0] = sharpness_probe(Alpha{0}, 1e-8);
    CHECK(std::abs(zero0) < 1e-6);
    CHECK(one0 < 0.0);

    CHECK_THROWS_AS((void)sharpness_probe(Alpha{4}, 1e-3), DomainError);
    CHECK_THROWS_AS((void)sharpness_probe(Alpha{4}, 0.0), DomainError);
}
