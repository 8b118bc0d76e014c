#pragma once

#include <variant>
#include <vector>

#include "fancut/geom.hpp"

namespace fancut {

struct Blob {
    Vec2 center;
    double radius = 0.0;
    double weight = 0.0;
};

/// Union of pairwise disjoint uniform disks; weights sum to 1.
struct DiskBlobMeasure {
    std::vector<Blob> blobs;
};

/// Uniform measure on a strictly convex polygon, vertices counter-clockwise.
struct PolygonMeasure {
    std::vector<Vec2> vertices;
    double area = 0.0;
};

/// Isotropic normal measure. support_sigmas controls the effective support
/// radius used wherever a bounded region is needed (mass outside
/// 8 sigma is below 1e-14).
struct GaussianMeasure {
    Vec2 mean;
    double sigma = 1.0;
    double support_sigmas = 8.0;
};

struct SupportBounds {
    Vec2 center;
    double radius = 0.0;
    bool exact = true;
};

using Measure = std::variant<DiskBlobMeasure, PolygonMeasure, GaussianMeasure>;

DiskBlobMeasure make_disk_blob_measure(std::vector<Blob> blobs);
PolygonMeasure make_polygon_measure(std::vector<Vec2> vertices);
GaussianMeasure make_gaussian_measure(const Vec2& mean, double sigma, double support_sigmas = 8.0);

SupportBounds support_bounds(const Measure& m);
SupportBounds joint_support_bounds(const Measure& a, const Measure& b);

/// Mass of the closed wedge, in [0, 1]. Angles above pi are evaluated through
/// the complement; angles equal to pi go through the halfplane path.
double wedge_mass(const Measure& m, const Wedge& w);

/// Mass of {p : p.n <= c}.
double halfplane_mass(const Measure& m, const Vec2& n, double c);

/// Area of disk(center, r) within the wedge; requires angle <= pi.
double disk_wedge_area(const Vec2& center, double r, const Wedge& w);

/// Area of disk(center, r) within {p : p.n <= c}, n unit.
double disk_halfplane_area(const Vec2& center, double r, const Vec2& n, double c);

double polygon_wedge_mass(const PolygonMeasure& m, const Wedge& w);
double gaussian_wedge_mass(const GaussianMeasure& m, const Wedge& w);

/// Convex clip of poly against {p : p.n <= c}.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double c);

double polygon_area(const std::vector<Vec2>& poly);

/// Standard normal CDF, accurate in both tails.
double norm_cdf(double z);

/// exp(z^2) * erfc(z) without overflow, for z >= 0.
double erfcx(double z);

}  // namespace fancut
