#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maecsim/geometry.hpp"
#include "maecsim/rng.hpp"
#include "support.hpp"

using namespace maecsim;

TEST_CASE("physical_hops at exact ring boundaries") {
    CHECK(physical_hops(0.0, 120.0) == 0);
    CHECK(physical_hops(1e-12, 120.0) == 1);
    CHECK(physical_hops(120.0, 120.0) == 1);
    CHECK(physical_hops(std::nextafter(120.0, 1e9), 120.0) == 2);
    CHECK(physical_hops(240.0, 120.0) == 2);
    CHECK(physical_hops(240.5, 120.0) == 3);

    // Ring edges land in the lower ring even when k*r is not exact in floats.
    for (const double r : {0.3, 0.7, 1.1, 120.0, 37.5}) {
        for (int k = 1; k <= 20; ++k) {
            const double d = static_cast<double>(k) * r;
            CHECK(physical_hops(d, r) == k);
        }
    }
}

TEST_CASE("physical_hops interval property") {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const double r = rng.uniform(0.05, 300.0);
        const double d = rng.uniform(1e-9, 8.0 * r);
        const HopCount h = physical_hops(d, r);
        CHECK(h >= 1);
        CHECK(static_cast<double>(h - 1) * r < d);
        CHECK(d <= static_cast<double>(h) * r);
    }
    CHECK_THROWS_AS(physical_hops(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(physical_hops(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(physical_hops(-1.0, 2.0), std::invalid_argument);
}

TEST_CASE("sector numbering convention") {
    const Point o{100.0, 100.0};
    // Sector k+1 owns [k*pi/4, (k+1)*pi/4); probe center angles and both edges.
    for (int s = 1; s <= 8; ++s) {
        CHECK(sector_of(o, support::polar(o, sector_center_angle(s), 5.0)) == s);
        const double lower = (s - 1) * pi / 4.0;
        CHECK(sector_of(o, support::polar(o, lower + 1e-7, 5.0)) == s);
    }
    CHECK(sector_of(o, {o.x + 3.0, o.y}) == 1);        // bearing exactly 0
    CHECK(sector_of(o, {o.x - 3.0, o.y}) == 5);        // bearing exactly pi
    CHECK(sector_of(o, {o.x, o.y + 3.0}) == 3);        // pi/2
    CHECK(sector_of(o, {o.x, o.y - 3.0}) == 7);        // 3pi/2
    CHECK(sector_of(o, o) == std::nullopt);            // no bearing when co-located
}

TEST_CASE("sector interval property") {
    Rng rng(7);
    const Point o{250.0, 400.0};
    for (int i = 0; i < 2000; ++i) {
        const double angle = rng.uniform(0.0, two_pi);
        const double dist = rng.uniform(0.01, 500.0);
        const Point t = support::polar(o, angle, dist);
        const auto s = sector_of(o, t);
        REQUIRE(s.has_value());
        const double theta = normalize_angle(std::atan2(t.y - o.y, t.x - o.x));
        CHECK(theta >= (*s - 1) * pi / 4.0);
        CHECK(theta < *s * pi / 4.0);
    }
}

TEST_CASE("sector center angles and opposites") {
    for (int i = 1; i <= 8; ++i) {
        CHECK(sector_center_angle(i) == doctest::Approx((2 * i - 1) * pi / 8.0).epsilon(1e-15));
        CHECK(opposite_sector(opposite_sector(i)) == i);
    }
    CHECK(opposite_sector(1) == 5);
    CHECK(opposite_sector(4) == 8);
    CHECK(opposite_sector(5) == 1);
    CHECK_THROWS_AS(sector_center_angle(0), std::invalid_argument);
    CHECK_THROWS_AS(sector_center_angle(9), std::invalid_argument);
    CHECK_THROWS_AS(opposite_sector(0), std::invalid_argument);
}

TEST_CASE("normalize_angle stays in the half-open range") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(two_pi) == 0.0);
    CHECK(normalize_angle(-two_pi) == 0.0);
    CHECK(normalize_angle(5.0 * pi) == doctest::Approx(pi).epsilon(1e-12));
    // A tiny negative wraps up; the result must not round to two_pi itself.
    for (const double nasty : {-1e-18, -1e-300, 7.0 * two_pi, -3.5 * two_pi, 1e12}) {
        const double a = normalize_angle(nasty);
        CHECK(a >= 0.0);
        CHECK(a < two_pi);
    }
}

TEST_CASE("distance and field membership") {
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}) == 5.0);
    CHECK(distance_squared({1.0, 1.0}, {4.0, 5.0}) == 25.0);
    const Field f{200.0, 100.0};
    CHECK(f.contains({0.0, 0.0}));
    CHECK(f.contains({200.0, 100.0}));
    CHECK(!f.contains({200.1, 50.0}));
    CHECK(!f.contains({50.0, -0.1}));
    CHECK(f.center() == Point{100.0, 50.0});
}

TEST_CASE("displace moves and clamps") {
    const Field f{10.0, 10.0};
    const Point p{9.0, 9.0};
    CHECK(displace(p, 0.0, 5.0, f) == Point{10.0, 9.0});
    CHECK(displace(p, pi / 2.0, 5.0, f).y == 10.0);
    CHECK(displace({5.0, 5.0}, 0.0, 0.0, f) == Point{5.0, 5.0});

    const Point q = displace({2.0, 3.0}, pi / 6.0, 1.5, f);
    CHECK(q.x == doctest::Approx(2.0 + 1.5 * std::cos(pi / 6.0)).epsilon(1e-15));
    CHECK(q.y == doctest::Approx(3.0 + 1.5 * std::sin(pi / 6.0)).epsilon(1e-15));

    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        const Point from{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
        const Point to = displace(from, rng.uniform(0.0, two_pi), rng.uniform(0.0, 30.0), f);
        CHECK(f.contains(to));
    }
}
