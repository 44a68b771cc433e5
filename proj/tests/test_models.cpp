#include <doctest.h>

#include <cmath>
#include <random>

#include "hypermono/geometry.hpp"
#include "oracles.hpp"

using namespace hypermono;

namespace {

Vec random_ball_point(std::mt19937_64& gen, int n, double max_r = 0.9) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Vec p = Vec::zero(n);
    double r2;
    do {
        for (int i = 0; i < n; ++i) p[i] = unif(gen);
        r2 = dot(p, p);
    } while (r2 >= max_r * max_r);
    return p;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("ball_to_hyperboloid maps the origin to the hyperboloid apex") {
    const HPoint x = ball_to_hyperboloid(Vec::zero(3));
    CHECK(x.xi[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x.xi[1] == 0.0);
    CHECK(x.xi[2] == 0.0);
    CHECK(x.xi[3] == 0.0);
}

TEST_CASE("ball_to_hyperboloid at p = (0.6, 0, 0)") {
    // xi0 = 1.36/0.64, xi1 = 1.2/0.64, cross-checked by xi0^2 - xi1^2 = 1.
    const HPoint x = ball_to_hyperboloid(Vec{0.6, 0.0, 0.0});
    CHECK(x.xi[0] == doctest::Approx(2.125).epsilon(1e-14));
    CHECK(x.xi[1] == doctest::Approx(1.875).epsilon(1e-14));
    CHECK(x.xi[2] == 0.0);
    CHECK(std::abs(x.xi[0] * x.xi[0] - x.xi[1] * x.xi[1] - 1.0) < 1e-12);
    CHECK(on_hyperboloid(x));
}

TEST_CASE("ball round trip is the identity on 100 random points") {
    auto gen = oracles::rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(trial % 3);
        const Vec p = random_ball_point(gen, n);
        const Vec q = hyperboloid_to_ball(ball_to_hyperboloid(p));
        for (int i = 0; i < n; ++i) CHECK(std::abs(p[i] - q[i]) < 1e-12);
    }
}

TEST_CASE("ball_to_hyperboloid rejects points outside the open ball") {
    CHECK_THROWS_AS(ball_to_hyperboloid(Vec{1.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(ball_to_hyperboloid(Vec{0.8, 0.7, 0.0}), std::domain_error);
}

TEST_CASE("time coordinate equals cosh of the distance to the center") {
    const CoordFn f = CoordFn::time_at_ball_origin(3);
    const HPoint O = ball_to_hyperboloid(Vec::zero(3));
    CHECK(f.value(O) == doctest::Approx(1.0).epsilon(1e-15));

    const HPoint p = ball_to_hyperboloid(Vec{0.6, 0.0, 0.0});
    CHECK(f.value(p) == doctest::Approx(2.125).epsilon(1e-14));
    // Oracle: cosh of the hyperbolic distance 2 artanh(0.6) = log 4.
    CHECK(f.value(p) == doctest::Approx(std::cosh(std::log(4.0))).epsilon(1e-13));
}

TEST_CASE("sphere height at pole and antipode") {
    SPoint pole{Vec{0.0, 0.0, 1.0, 0.0}};
    const CoordFn f = CoordFn::sphere_height(pole);
    CHECK(f.value(pole) == doctest::Approx(0.0).epsilon(1e-15));
    SPoint antipode{pole.x * -1.0};
    CHECK(f.value(antipode) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("coordinate kinds reject mismatched ambients") {
    const CoordFn t = CoordFn::time_at_ball_origin(3);
    SPoint sp{Vec{1.0, 0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(t.value(sp), std::invalid_argument);
    const CoordFn sh = CoordFn::sphere_height(sp);
    HPoint hp = ball_to_hyperboloid(Vec::zero(3));
    CHECK_THROWS_AS(sh.value(hp), std::invalid_argument);
}

TEST_CASE("warp data tables") {
    const CoordFn t = CoordFn::time_at_ball_origin(3);
    CHECK(t.U(1.0) == 1.0);
    CHECK(t.V(1.0) == 0.0);
    CHECK_THROWS_AS(t.U(0.99), std::domain_error);

    const CoordFn nl = CoordFn::null_at(Vec{0.0, 0.0, 1.0});
    CHECK(nl.U(2.0) == 2.0);
    CHECK(nl.V(2.0) == 4.0);

    SPoint pole{Vec{1.0, 0.0, 0.0, 0.0}};
    const CoordFn sh = CoordFn::sphere_height(pole);
    CHECK(sh.U(1.0) == 0.0);
    CHECK(sh.V(1.0) == 1.0);

    const CoordFn sp = CoordFn::space(Vec{0.0, 1.0, 0.0, 0.0});
    CHECK(sp.U(0.5) == 0.5);
    CHECK(sp.V(0.5) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("U equals half the h-derivative of V, 1000 random levels per kind") {
    auto gen = oracles::rng(2);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const CoordFn kinds[4] = {
        CoordFn::time_at_ball_origin(3),
        CoordFn::space(Vec{0.0, 1.0, 0.0, 0.0}),
        CoordFn::null_at(Vec{0.0, 0.0, 1.0}),
        CoordFn::sphere_height(SPoint{Vec{1.0, 0.0, 0.0, 0.0}}),
    };
    const double eps = 1e-5;
    for (const CoordFn& f : kinds) {
        for (int i = 0; i < 1000; ++i) {
            double h;
            switch (f.kind()) {
                case CoordFn::Kind::Time: h = 1.0 + eps + 10.0 * unif(gen); break;
                case CoordFn::Kind::Space: h = -5.0 + 10.0 * unif(gen); break;
                case CoordFn::Kind::Null: h = eps + 10.0 * unif(gen); break;
                default: h = eps + (2.0 - 2.0 * eps) * unif(gen); break;
            }
            const double fd = (f.V(h + eps) - f.V(h - eps)) / (4.0 * eps);
            CHECK(std::abs(f.U(h) - fd) < 1e-6);
        }
    }
}

TEST_CASE("time coordinate is invariant under rotations fixing the center") {
    auto gen = oracles::rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 3;
    const CoordFn f = CoordFn::time_at_ball_origin(n);
    for (int trial = 0; trial < 10; ++trial) {
        // Random rotation of the spatial coordinates (Gram-Schmidt of a
        // Gaussian matrix), a Minkowski isometry fixing the center.
        double q[3][3];
        for (auto& row : q)
            for (double& x : row) x = gauss(gen);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < i; ++j) {
                double d = 0;
                for (int c = 0; c < 3; ++c) d += q[i][c] * q[j][c];
                for (int c = 0; c < 3; ++c) q[i][c] -= d * q[j][c];
            }
            double nn = 0;
            for (int c = 0; c < 3; ++c) nn += q[i][c] * q[i][c];
            for (int c = 0; c < 3; ++c) q[i][c] /= std::sqrt(nn);
        }
        const Vec p = random_ball_point(gen, n);
        Vec rp = Vec::zero(n);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rp[i] += q[i][j] * p[j];
        const double a = f.value(ball_to_hyperboloid(p));
        const double b = f.value(ball_to_hyperboloid(rp));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("null coordinate times the half-space height is lambda") {
    auto gen = oracles::rng(4);
    const Vec b{0.0, 0.0, 1.0};
    for (double lambda : {1.0, 2.5}) {
        const CoordFn f = CoordFn::null_at(b, lambda);
        for (int trial = 0; trial < 50; ++trial) {
            const HPoint p = ball_to_hyperboloid(random_ball_point(gen, 3));
            const HalfSpacePoint hs = hyperboloid_to_halfspace(p, b);
            CHECK(f.value(p) * hs.height == doctest::Approx(lambda).epsilon(1e-11));
        }
    }
}

TEST_CASE("distance basics") {
    // arccosh near 1 amplifies the last-bit rounding of the pairing to ~1e-8.
    const HPoint p = ball_to_hyperboloid(Vec{0.1, 0.2, -0.3});
    CHECK(distance(p, p) < 1e-7);

    SPoint pole{Vec{0.0, 0.0, 0.0, 1.0}};
    SPoint anti{pole.x * -1.0};
    CHECK(distance(pole, anti) == doctest::Approx(hypermono::pi).epsilon(1e-15));

    // arccosh(2.125) equals 2 artanh(0.6) = log 4.
    const HPoint O = ball_to_hyperboloid(Vec::zero(3));
    const HPoint q = ball_to_hyperboloid(Vec{0.6, 0.0, 0.0});
    CHECK(distance(O, q) == doctest::Approx(std::log(4.0)).epsilon(1e-13));
}

TEST_CASE("unit sphere volumes") {
    CHECK(unit_sphere_volume(0) == 2.0);
    CHECK(unit_sphere_volume(1) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK(unit_sphere_volume(2) == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(unit_sphere_volume(3) == doctest::Approx(2.0 * pi * pi).epsilon(1e-15));
}

}  // TEST_SUITE
