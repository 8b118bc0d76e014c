#pragma once

#include <cstddef>

#include "fancut/geom.hpp"
#include "fancut/measures.hpp"

namespace fancut {

/// Line of a given direction that splits a measure into equal halves.
/// The line is {p : p.normal == offset} with normal = perp(direction).
/// For disconnected supports the halving offsets form a closed interval;
/// offset is its midpoint (the canonical representative).
struct HalvingLine {
    Vec2 direction;
    Vec2 normal;
    double offset = 0.0;
    double offset_lo = 0.0;
    double offset_hi = 0.0;
};

HalvingLine halving_line(const Measure& m, const Vec2& direction, double tol = 1e-8);

/// A point of the j-th color set: apex of a translate of F_j with mass 1/2,
/// parameterized by the coordinate s along the direction perpendicular to
/// the bisector of F_j.
struct CurvePoint {
    double s = 0.0;
    Vec2 apex;
    double mass_check = 0.0;
};

/// Unit bisector of wedge j and its left normal (the s axis).
struct WedgeFrame {
    Vec2 bisector;
    Vec2 s_axis;
};

WedgeFrame wedge_frame(const Fan& fan, std::size_t j);

CurvePoint curve_point(const Measure& m, const Fan& fan, std::size_t j, double s, double tol = 1e-8);

/// The asymptotic angle bounded by the halving lines of directions e_j and
/// e_{j+1}: a translate of -F_j whose boundary lines halve the measure.
struct AlphaAngle {
    Wedge wedge;
    std::size_t source_j = 0;
    int source_i = 0;
};

AlphaAngle alpha_angle(const Measure& m, const Fan& fan, std::size_t j, double tol = 1e-8);

/// Degenerate variant for wedge angle pi: the alpha angle is the halfplane
/// {p.n <= offset} bounded by the halving line of direction e_j.
Halfplane alpha_halfplane(const Measure& m, const Fan& fan, std::size_t j, double tol = 1e-8);

enum class Relation {
    first_inside,   // a is contained in b
    second_inside,  // b is contained in a
    cross,          // boundaries intersect transversally exactly once
    shared_ray,     // a boundary ray lies on a common line
};

const char* relation_name(Relation r);

/// Containment relation between two translates of the same -F_j.
Relation containment_relation(const AlphaAngle& a, const AlphaAngle& b);

}  // namespace fancut
