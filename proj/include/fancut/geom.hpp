#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fancut/errors.hpp"

namespace fancut {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Left (counter-clockwise) normal.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

Vec2 normalized(const Vec2& v);

/// Counter-clockwise turn from u to v, in [0, 2*pi).
double ccw_angle(const Vec2& u, const Vec2& v);

/// Rotate v counter-clockwise by angle radians.
Vec2 rotate(const Vec2& v, double angle);

/// Cyclically ordered unit ray directions e_1..e_k; the j-th angle spans
/// e_j to e_{j+1} counter-clockwise. Indices are 0-based in code.
struct Fan {
    std::vector<Vec2> directions;

    std::size_t size() const { return directions.size(); }
    double wedge_angle(std::size_t j) const;
};

/// Region swept counter-clockwise from dir_lo to dir_hi around apex.
/// Membership is closed (boundary rays and apex included).
struct Wedge {
    Vec2 apex;
    Vec2 dir_lo;
    Vec2 dir_hi;
    double angle = 0.0;  // ccw turn from dir_lo to dir_hi, in (0, 2*pi)
};

/// The set {p : p.normal <= offset}.
struct Halfplane {
    Vec2 normal;  // unit
    double offset = 0.0;
};

/// Validates and normalizes fan directions. The given cyclic order is kept;
/// inputs that are not strictly counter-clockwise are rejected, not reordered.
Fan fan_from_directions(const std::vector<Vec2>& dirs);

Wedge make_wedge(const Vec2& apex, const Vec2& dir_lo, const Vec2& dir_hi);

/// The angle F_j translated to apex t.
Wedge wedge_of(const Fan& fan, std::size_t j, const Vec2& t);

/// Central symmetry about the apex: both directions negated, angle kept.
Wedge opposite_wedge(const Wedge& w);

/// Closure of the complement at the same apex; angle becomes 2*pi - angle.
Wedge complement_wedge(const Wedge& w);

bool point_in_wedge(const Wedge& w, const Vec2& p);

bool point_in_halfplane(const Halfplane& h, const Vec2& p);

}  // namespace fancut
