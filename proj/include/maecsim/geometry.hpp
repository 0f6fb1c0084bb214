#pragma once

// Planar primitives shared by every other module: points, the rectangular
// deployment field, the hop metric, and the eight-sector partition around a
// base station.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace maecsim {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

inline double distance_squared(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) {
    return std::sqrt(distance_squared(a, b));
}

struct Field {
    double width = 0.0;
    double height = 0.0;

    bool operator==(const Field&) const = default;

    bool contains(Point p) const {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }

    Point center() const { return {width / 2.0, height / 2.0}; }
};

using HopCount = int;
using SectorIndex = int;  // valid values 1..8

// Maps any angle to [0, 2*pi). The explicit wrap after adding two_pi matters:
// for tiny negative inputs the sum rounds to exactly two_pi, which would
// otherwise escape the half-open range.
inline double normalize_angle(double a) {
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
}

// Hop count i is the unique integer with (i-1)*r < d <= i*r; zero distance is
// hop 0 (co-located, never aggregated). ceil(d/r) is only a float estimate, so
// the result is nudged until the interval test holds exactly.
inline HopCount physical_hops(double d, double r) {
    if (r <= 0.0) throw std::invalid_argument("physical_hops: comm radius must be positive");
    if (d < 0.0) throw std::invalid_argument("physical_hops: distance must be non-negative");
    if (d == 0.0) return 0;
    double est = std::ceil(d / r);
    int i = est < 1.0 ? 1 : static_cast<int>(est);
    while (i > 1 && static_cast<double>(i - 1) * r >= d) --i;
    while (static_cast<double>(i) * r < d) ++i;
    return i;
}

// Sector 1 spans [0, pi/4) counter-clockwise from the +x axis; sectors are
// numbered 1..8 going counter-clockwise. A target coincident with the origin
// has no bearing and therefore no sector.
inline std::optional<SectorIndex> sector_of(Point origin, Point target) {
    const double dx = target.x - origin.x;
    const double dy = target.y - origin.y;
    if (dx == 0.0 && dy == 0.0) return std::nullopt;
    const double theta = normalize_angle(std::atan2(dy, dx));
    int s = static_cast<int>(theta / (pi / 4.0)) + 1;
    if (s > 8) s = 8;
    return s;
}

inline double sector_center_angle(SectorIndex i) {
    if (i < 1 || i > 8) throw std::invalid_argument("sector_center_angle: index must be in 1..8");
    return static_cast<double>(2 * i - 1) * pi / 8.0;
}

inline SectorIndex opposite_sector(SectorIndex i) {
    if (i < 1 || i > 8) throw std::invalid_argument("opposite_sector: index must be in 1..8");
    return i <= 4 ? i + 4 : i - 4;
}

// Moves p by dist along angle, clamping each coordinate to the field. With
// dist == 0 this is the identity for in-field points.
inline Point displace(Point p, double angle, double dist, const Field& field) {
    Point q{p.x + dist * std::cos(angle), p.y + dist * std::sin(angle)};
    q.x = std::clamp(q.x, 0.0, field.width);
    q.y = std::clamp(q.y, 0.0, field.height);
    return q;
}

}  // namespace maecsim
