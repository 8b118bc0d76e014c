#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace fancut;
using testsupport::unit_dir;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("fan_from_directions validates and keeps order") {
    Fan fan = fan_from_directions({{1, 0}, {0, 1}, {-1 / kSqrt2, -1 / kSqrt2}});
    REQUIRE(fan.size() == 3);
    CHECK(fan.wedge_angle(0) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(fan.wedge_angle(1) == doctest::Approx(3 * kPi / 4).epsilon(1e-12));
    CHECK(fan.wedge_angle(2) == doctest::Approx(3 * kPi / 4).epsilon(1e-12));
    for (const Vec2& d : fan.directions) CHECK(std::abs(d.norm() - 1.0) <= 1e-12);

    Fan two = fan_from_directions({{1, 0}, {-1, 0}});
    CHECK(two.wedge_angle(0) == doctest::Approx(kPi));
    CHECK(two.wedge_angle(1) == doctest::Approx(kPi));
}

TEST_CASE("fan_from_directions rejects bad input") {
    CHECK_THROWS_AS(fan_from_directions({{1, 0}, {0, -1}, {-1, 0}}), Error);
    try {
        fan_from_directions({{1, 0}, {0, -1}, {-1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_counter_clockwise);
    }
    try {
        fan_from_directions({{1, 0}, {0, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_vector);
    }
    CHECK_THROWS_AS(fan_from_directions({{1, 0}}), Error);
    CHECK_THROWS_AS(fan_from_directions({{1, 0}, {1, 0}}), Error);  // repeated ray
}

TEST_CASE("wedge_of produces the requested angle") {
    Fan quad = fan_from_directions({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

    Wedge first = wedge_of(quad, 0, {0, 0});
    CHECK(point_in_wedge(first, {1, 1}));
    CHECK(point_in_wedge(first, {1, 0}));  // boundary is closed
    CHECK(!point_in_wedge(first, {-1, 1}));
    CHECK(first.angle == doctest::Approx(kPi / 2));

    Wedge fourth = wedge_of(quad, 3, {2, 3});
    CHECK(point_in_wedge(fourth, {3, 2}));
    CHECK(!point_in_wedge(fourth, {3, 4}));
    CHECK(!point_in_wedge(fourth, {1, 2}));

    Fan two = fan_from_directions({{1, 0}, {-1, 0}});
    Wedge upper = wedge_of(two, 0, {0, 0});
    CHECK(upper.angle == doctest::Approx(kPi));
    CHECK(point_in_wedge(upper, {0.3, 5}));
    CHECK(point_in_wedge(upper, {7, 0}));
    CHECK(!point_in_wedge(upper, {0, -0.1}));

    CHECK_THROWS_AS(wedge_of(quad, 4, {0, 0}), Error);
}

TEST_CASE("opposite_wedge is the central symmetry") {
    Fan quad = fan_from_directions({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    Wedge first = wedge_of(quad, 0, {0, 0});
    Wedge opp = opposite_wedge(first);
    CHECK(opp.angle == doctest::Approx(first.angle));
    CHECK(point_in_wedge(opp, {-1, -1}));
    CHECK(!point_in_wedge(opp, {1, 1}));

    Fan two = fan_from_directions({{1, 0}, {-1, 0}});
    Wedge upper = wedge_of(two, 0, {0, 0});
    Wedge lower = opposite_wedge(upper);
    CHECK(point_in_wedge(lower, {0, -2}));
    CHECK(!point_in_wedge(lower, {0, 2}));

    Wedge w = make_wedge({0.5, -2}, unit_dir(0.3), unit_dir(0.3 + 3 * kPi / 4));
    Wedge o = opposite_wedge(w);
    CHECK(o.angle == doctest::Approx(3 * kPi / 4));
    CHECK(o.dir_lo == -w.dir_lo);
    CHECK(o.dir_hi == -w.dir_hi);
    Wedge oo = opposite_wedge(o);
    CHECK(oo.dir_lo == w.dir_lo);
    CHECK(oo.dir_hi == w.dir_hi);
    CHECK(oo.apex == w.apex);
}

TEST_CASE("point_in_wedge handles reflex wedges through the complement") {
    // All directions except the open first quadrant.
    Wedge w = make_wedge({0, 0}, {0, 1}, {1, 0});
    CHECK(w.angle == doctest::Approx(3 * kPi / 2));
    CHECK(!point_in_wedge(w, {1, 1}));
    CHECK(point_in_wedge(w, {1, 0}));
    CHECK(point_in_wedge(w, {0, 1}));
    CHECK(point_in_wedge(w, {-1, 1}));
    CHECK(point_in_wedge(w, {-1, -5}));
    CHECK(point_in_wedge(w, {0, 0}));
}

TEST_CASE("wedges of a fan tile the plane") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Fan fan = testsupport::random_fan(rng, 3 + trial % 5);
        for (int i = 0; i < 720; ++i) {
            double a = 2.0 * kPi * (i + 0.278) / 720.0;
            Vec2 p = unit_dir(a) * 2.7;
            bool near_ray = false;
            for (const Vec2& d : fan.directions)
                if (std::abs(cross(d, normalized(p))) < 1e-9 && dot(d, p) > 0) near_ray = true;
            int count = 0;
            for (std::size_t j = 0; j < fan.size(); ++j)
                if (point_in_wedge(wedge_of(fan, j, {0, 0}), p)) ++count;
            if (near_ray)
                CHECK(count >= 2);
            else
                CHECK(count == 1);
        }
    }
}

TEST_CASE("wedge membership is translation equivariant") {
    testsupport::Rng rng(11);
    Fan fan = testsupport::random_fan(rng, 5);
    for (int i = 0; i < 200; ++i) {
        Vec2 t{testsupport::uniform(rng, -3, 3), testsupport::uniform(rng, -3, 3)};
        Vec2 p{testsupport::uniform(rng, -5, 5), testsupport::uniform(rng, -5, 5)};
        std::size_t j = i % fan.size();
        CHECK(point_in_wedge(wedge_of(fan, j, t), p) ==
              point_in_wedge(wedge_of(fan, j, {0, 0}), p - t));
    }
}

TEST_CASE("complement_wedge complements membership off the boundary") {
    testsupport::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        double a0 = testsupport::uniform(rng, 0, 2 * kPi);
        double ang = testsupport::uniform(rng, 0.2, 2 * kPi - 0.2);
        Wedge w = make_wedge({testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -1, 1)},
                             unit_dir(a0), unit_dir(a0 + ang));
        Wedge c = complement_wedge(w);
        CHECK(c.angle == doctest::Approx(2 * kPi - w.angle));
        Vec2 p{testsupport::uniform(rng, -4, 4), testsupport::uniform(rng, -4, 4)};
        Vec2 v = p - w.apex;
        bool on_boundary = std::abs(cross(w.dir_lo, v)) < 1e-9 || std::abs(cross(w.dir_hi, v)) < 1e-9;
        if (!on_boundary) CHECK(point_in_wedge(w, p) != point_in_wedge(c, p));
    }
}
