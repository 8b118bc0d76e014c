#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fancut/measures.hpp"
#include "fancut/solver.hpp"

namespace fancut {

enum class Family { fig1_4fan, polygon_2kfan, arbitrary_4fan, gaussian_pair };

const char* family_name(Family f);

struct CounterexampleConfig {
    Fan fan;
    Measure m1;  // red
    Measure m2;  // blue
    Family family = Family::fig1_4fan;
    double scale = 1.0;
    double blob_radius = 0.0;
    double gauss_region_halfwidth = 20.0;  // apex box half-width for the gaussian certificate
};

/// Three red blobs on the midpoints of a regular triangle, three blue blobs
/// (one at the center), and a 4-fan with all rays parallel to triangle sides.
CounterexampleConfig build_fig1_4fan(double scale, double blob_radius);

/// 2k-fan with one pi angle and 2k-1 angles of pi/(2k-1) against measures on
/// a regular (2k-1)-gon: red on side midpoints (k even) or vertices (k odd),
/// blue split between the inner region and the outer angles below the bottom
/// line.
CounterexampleConfig build_polygon_2kfan(int k, double scale, double blob_radius);

/// Three red and three blue blobs against an arbitrary 4-fan without
/// opposite rays, at near/far distances scale*{0.1, 10, 100}.
CounterexampleConfig build_arbitrary_4fan(const Fan& fan, double scale, double blob_radius);

/// The isotropic pair with common mean: sigma 1 and sigma 2.
CounterexampleConfig build_gaussian_pair();

struct CaseBound {
    std::size_t j = 0;
    std::string kind;
    double bound = 0.0;
    std::string note;
};

/// Machine-checkable record that no translate of any fan angle can halve
/// both measures: delta is a certified lower bound on
/// min over j, t of max_i |mu_i(t + F_j) - 1/2| over the covered region.
/// For disk-blob configs the cover is total (every translate in the plane);
/// region_* record where fine evaluation was needed.
struct Certificate {
    double delta = 0.0;
    Vec2 region_center;
    double region_radius = 0.0;
    double grid_step = 0.0;
    double lipschitz = 0.0;
    long long evaluations = 0;
    std::vector<double> per_wedge_delta;
    std::vector<CaseBound> boundary_cases;
    bool region_bounded = false;  // true for the gaussian family
};

struct Refutation {
    std::size_t j = 0;
    Vec2 t;
    double deviation = 0.0;
};

using VerifyOutcome = std::variant<Certificate, Refutation>;

/// Exhaustive certified search. Returns a Certificate with delta > 0, or a
/// Refutation witness with deviation <= tol; throws GridTooCoarse when the
/// grid cannot separate the two.
VerifyOutcome verify_no_equipartition(const CounterexampleConfig& cfg, double grid_step,
                                      double tol);

/// max_i |mu_i(t + F_j) - 1/2|, the quantity the certificate bounds.
double config_deviation(const CounterexampleConfig& cfg, std::size_t j, const Vec2& t);

}  // namespace fancut
