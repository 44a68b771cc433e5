#include <doctest.h>

#include <cmath>
#include <random>

#include "hypermono/weights.hpp"
#include "oracles.hpp"

using namespace hypermono;

namespace {

const CoordFn time_coord = CoordFn::time_at_ball_origin(3);
const CoordFn space_coord = CoordFn::space(Vec{0.0, 0.0, 0.0, 1.0});
const CoordFn null_coord = CoordFn::null_at(Vec{0.0, 0.0, 1.0});
const CoordFn sphere_coord = CoordFn::sphere_height(SPoint{Vec{1.0, 0.0, 0.0, 0.0}});

const CoordFn& coord_of_delta(int delta) {
    switch (delta) {
        case -1: return time_coord;
        case +1: return space_coord;
        default: return null_coord;
    }
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("natural time tube volume is pi (t^2 - 1) for k = 2") {
    const Weight w = Weight::natural(1.0);
    for (double t : {1.5, 2.0, 5.0, 20.0}) {
        CHECK(tube_volume(w, time_coord, 2, t) ==
              doctest::Approx(pi * (t * t - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("uniform compensated null tube volume is 2 pi (t - a/2)") {
    const double a = 0.7;
    const Weight w = Weight::uniform(a, 1.0 / a);
    for (double t : {0.7, 1.0, 3.0, 11.0}) {
        CHECK(tube_volume(w, null_coord, 2, t) ==
              doctest::Approx(2.0 * pi * (t - 0.5 * a)).epsilon(1e-12));
    }
}

TEST_CASE("empty tube with c = 0 has volume 0") {
    CHECK(tube_volume(Weight::uniform(2.0, 0.0), time_coord, 2, 2.0) == 0.0);
    CHECK(tube_volume(Weight::natural(1.5), time_coord, 3, 1.5) ==
          doctest::Approx(unit_sphere_volume(2) / 3.0 * std::pow(1.25, 1.5)).epsilon(1e-12));
    CHECK_THROWS_AS(tube_volume(Weight::uniform(2.0, 0.0), time_coord, 2, 1.9),
                    std::domain_error);
}

TEST_CASE("q_delta closed forms at a = 1, k = 2") {
    // delta = -1: integrand (s^2-1)^0 = 1, boundary term 0.
    CHECK(q_delta(1.0, 4.0, 2, -1) == doctest::Approx(3.0).epsilon(1e-12));
    // delta = +1: t - 1 + (1/2) * 2 = t.
    CHECK(q_delta(1.0, 4.0, 2, +1) == doctest::Approx(4.0).epsilon(1e-12));
    // delta = 0: t - 1 + 1/2.
    CHECK(q_delta(1.0, 4.0, 2, 0) == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("q_delta against the Simpson oracle for k = 3") {
    const double a = 1.3, t = 2.9;
    for (int delta : {-1, 0, 1}) {
        const double oracle =
            oracles::simpson([&](double s) { return std::sqrt(s * s + delta); }, a, t, 4000) +
            std::pow(a * a + delta, 1.5) / (3.0 * a);
        CHECK(q_delta(a, t, 3, delta) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("q_delta rejects bad arguments") {
    CHECK_THROWS_AS(q_delta(2.0, 1.0, 2, 0), std::domain_error);
    CHECK_THROWS_AS(q_delta(1.0, 2.0, 2, 5), std::domain_error);
    CHECK_THROWS_AS(q_delta(0.5, 2.0, 2, -1), std::domain_error);
}

TEST_CASE("omega * q_delta equals the compensated uniform tube volume") {
    auto gen = oracles::rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int delta = static_cast<int>(trial % 3) - 1;
        const int k = 1 + static_cast<int>(trial % 4);
        const double a = (delta == -1 ? 1.0 : 0.2) + 2.0 * unif(gen);
        const double t = a + 0.1 + 5.0 * unif(gen);
        const CoordFn& f = coord_of_delta(delta);
        const Weight w = Weight::uniform(a, 1.0 / a);
        const double lhs = unit_sphere_volume(k - 1) * q_delta(a, t, k, delta);
        const double rhs = tube_volume(w, f, k, t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("natural tube volume does not depend on the starting level") {
    for (int k : {1, 2, 3, 4}) {
        const double v1 = tube_volume(Weight::natural(1.0), time_coord, k, 7.0);
        const double v2 = tube_volume(Weight::natural(2.5), time_coord, k, 7.0);
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-10));
        CHECK(v1 == doctest::Approx(unit_sphere_volume(k - 1) / k *
                                    std::pow(48.0, 0.5 * k)).epsilon(1e-10));
    }
}

TEST_CASE("same P with larger c is weaker") {
    const Weight w1 = Weight::uniform(1.5, 2.0);
    const Weight w2 = Weight::uniform(1.5, 1.0);
    CHECK(is_weaker(w1, w2, time_coord, 2, 1.6, 20.0).weaker);
    const auto rev = is_weaker(w2, w1, time_coord, 2, 1.6, 20.0);
    CHECK(!rev.weaker);
    CHECK(rev.witness.has_value());
}

TEST_CASE("uniform is weaker than natural from the critical level, interval [1, 10]") {
    // The t = 1 sample is vacuous (both tubes empty) rather than an error.
    const auto v = is_weaker(Weight::uniform(1.0), Weight::natural(1.0), time_coord, 2,
                             1.0, 10.0);
    CHECK(v.weaker);
}

TEST_CASE("weights are equal to themselves") {
    const Weight w = Weight::natural(1.0);
    CHECK(is_weaker(w, w, time_coord, 2, 1.1, 30.0).weaker);
}

TEST_CASE("degenerate interval reports an error") {
    // A tabulated weight that vanishes on [1, 1.5] makes the tube volume zero
    // beyond the starting level.
    const Weight flat = Weight::tabulated({1.0, 1.5, 2.0, 3.0}, {0.0, 0.0, 1.0, 1.0}, 1.0);
    CHECK_THROWS_AS(is_weaker(flat, Weight::uniform(1.0), time_coord, 2, 1.2, 1.4, 8),
                    std::domain_error);
}

TEST_CASE("five-weight chain: all four adjacent comparisons are weaker") {
    const auto verdicts = chain_check(time_coord, 2, 1.01, 50.0, 500);
    REQUIRE(verdicts.size() == 4);
    for (const auto& v : verdicts) CHECK(v.weaker);
}

TEST_CASE("five-weight chain at k = 1") {
    const auto verdicts = chain_check(time_coord, 1, 1.01, 50.0, 200);
    REQUIRE(verdicts.size() == 4);
    for (const auto& v : verdicts) CHECK(v.weaker);
}

TEST_CASE("reversing a chain pair fails with a witness") {
    const auto ws = chain_weights();
    const auto v = is_weaker(ws[0], ws[1], time_coord, 2, 1.01, 50.0, 500);
    CHECK(!v.weaker);
    CHECK(v.witness.has_value());
}

TEST_CASE("chain ordering is transitive on sampled triples") {
    const auto ws = chain_weights();
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i; j < ws.size(); ++j)
            for (size_t l = j; l < ws.size(); ++l) {
                const bool ij = is_weaker(ws[j], ws[i], time_coord, 2, 1.05, 30.0, 64).weaker;
                const bool jl = is_weaker(ws[l], ws[j], time_coord, 2, 1.05, 30.0, 64).weaker;
                const bool il = is_weaker(ws[l], ws[i], time_coord, 2, 1.05, 30.0, 64).weaker;
                CHECK(ij);
                CHECK(jl);
                CHECK(il);
            }
}

TEST_CASE("compensated weights: time coordinate, h0 = 2") {
    const auto pair = compensated_weights(time_coord, 2.0);
    CHECK(pair.compensated.c == doctest::Approx(0.5));
    CHECK(pair.expected_order == CompensatedOrder::CompensatedWeaker);
    CHECK(is_weaker(pair.compensated, pair.natural, time_coord, 2, 2.0, 40.0, 400).weaker);
}

TEST_CASE("compensated weights: sphere, h0 = 0.5") {
    SPoint pole{Vec{1.0, 0.0, 0.0, 0.0}};
    const CoordFn f = CoordFn::sphere_height(pole);
    const auto pair = compensated_weights(f, 0.5);
    CHECK(pair.compensated.c == doctest::Approx(2.0));
    CHECK(pair.expected_order == CompensatedOrder::NaturalWeaker);
    CHECK(is_weaker(pair.natural, pair.compensated, f, 2, 0.5, 0.999, 400).weaker);
}

TEST_CASE("compensated weights: null coordinate, h0 = 1") {
    const auto pair = compensated_weights(null_coord, 1.0);
    CHECK(pair.compensated.c == doctest::Approx(1.0));
    CHECK(pair.expected_order == CompensatedOrder::CompensatedWeaker);
    CHECK(is_weaker(pair.compensated, pair.natural, null_coord, 2, 1.0, 100.0, 400).weaker);
}

TEST_CASE("compensated weights reject out-of-range starting levels") {
    CHECK_THROWS_AS(compensated_weights(time_coord, -1.0), std::domain_error);
    CHECK_THROWS_AS(compensated_weights(sphere_coord, 1.5), std::domain_error);
}

TEST_CASE("tabulated weights interpolate monotone data positively") {
    std::vector<double> hs, ps;
    for (int i = 0; i <= 12; ++i) {
        hs.push_back(1.0 + 0.5 * i);
        ps.push_back(0.1 + std::sqrt(static_cast<double>(i)));
    }
    const Weight w = Weight::tabulated(hs, ps, 1.0);
    for (double h = 1.0; h <= 7.0; h += 0.01) {
        CHECK(w.P(h, time_coord, 2) > 0.0);
    }
    // Interpolation reproduces the nodes.
    CHECK(w.P(2.5, time_coord, 2) == doctest::Approx(0.1 + std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("tube volume is strictly increasing where the integrand is positive") {
    auto gen = oracles::rng(12);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Weight w = trial % 2 ? Weight::natural(1.0) : Weight::uniform(1.0, 0.3);
        const int k = 1 + trial % 3;
        double prev = tube_volume(w, time_coord, k, 1.0 + 1e-6);
        for (int i = 1; i <= 8; ++i) {
            const double t = 1.0 + 1e-6 + i * (0.5 + unif(gen));
            const double q = tube_volume(w, time_coord, k, t);
            CHECK(q > prev);
            prev = q;
        }
    }
}

}  // TEST_SUITE
