#include <doctest.h>

#include <cmath>

#include "hypermono/ode.hpp"
#include "hypermono/quadrature.hpp"
#include "hypermono/rootfind.hpp"
#include "hypermono/vec.hpp"
#include "oracles.hpp"

using namespace hypermono;

TEST_SUITE("numerics") {

TEST_CASE("adaptive quadrature hits analytic values") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(x); }, -1.0, 2.0) ==
          doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-12));
    // A narrow spike needs the adaptive refinement.
    const double spike = integrate(
        [](double x) { return std::exp(-1e4 * (x - 0.37) * (x - 0.37)); }, 0.0, 1.0);
    CHECK(spike == doctest::Approx(std::sqrt(pi) / 100.0).epsilon(1e-9));
}

TEST_CASE("square-root endpoint substitution") {
    // int_0^1 dx / sqrt(x) = 2.
    const double v = integrate_sqrt_left([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bisection and scanned roots") {
    CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    const auto roots = scan_roots([](double x) { return std::sin(x); }, 0.1, 7.0, 64, 1e-12);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(pi).epsilon(1e-11));
    CHECK(roots[1] == doctest::Approx(2.0 * pi).epsilon(1e-11));
}

TEST_CASE("band intervals of a parabola") {
    // { 1 <= x^2 <= 4 } on [-3, 3] is [-2,-1] and [1,2].
    const auto iv = band_intervals([](double x) { return x * x; }, -3.0, 3.0, 1.0, 4.0, 128,
                                   1e-12);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].first == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(iv[0].second == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(iv[1].first == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(iv[1].second == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("ODE integrator reproduces the exponential and locates events") {
    const Field3 f = [](double, const State3& y) -> State3 { return {y[0], 0.0, 0.0}; };
    const auto traj = integrate_ode(
        f, 0.0, {1.0, 0.0, 0.0}, +1,
        [](double, const State3& y) { return y[0] - std::exp(1.0); }, nullptr, {});
    CHECK(traj.event_hit);
    CHECK(traj.s_end() == doctest::Approx(1.0).epsilon(1e-9));
    // Dense output mid-trajectory.
    const State3 mid = traj.eval(0.5);
    CHECK(mid[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("coordinate descent finds a quadratic minimum") {
    const auto res = coordinate_descent(
        [](double u, double v) { return (u - 0.3) * (u - 0.3) + 2.0 * (v + 0.4) * (v + 0.4); },
        0.0, 0.0, 0.25, 1e-10, -1.0, 1.0, -1.0, 1.0);
    CHECK(res.u == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(res.v == doctest::Approx(-0.4).epsilon(1e-7));
}

}  // TEST_SUITE
