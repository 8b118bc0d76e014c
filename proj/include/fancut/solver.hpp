#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fancut/halving.hpp"

namespace fancut {

enum class FanClass { odd, symmetric_even, opposite_rays_even, other };

const char* fan_class_name(FanClass c);

FanClass classify_fan(const Fan& fan);

/// Containment relations of the alpha-angle pairs, one per wedge, plus the
/// candidate wedges whose boundaries meet (CROSS or SHARED_RAY).
struct ParityReport {
    std::vector<Relation> relations;
    std::vector<std::size_t> candidates;
    bool alternating = true;
    FanClass fan_class = FanClass::other;
};

ParityReport parity_report(const Fan& fan, const Measure& m1, const Measure& m2, double tol = 1e-8);

enum class SolveMethod { curve_intersection, shared_ray, halfplane_direct };

const char* solve_method_name(SolveMethod m);

struct EquipartitionResult {
    std::size_t j = 0;
    Vec2 t;
    double residual1 = 0.0;
    double residual2 = 0.0;
    SolveMethod method = SolveMethod::curve_intersection;
    bool truncated = false;  // a support bound was inexact (gaussian tails)
};

struct FailureDiagnostic {
    ParityReport parity;
    std::string message;
};

using SolveOutcome = std::variant<EquipartitionResult, FailureDiagnostic>;

/// Searches every candidate angle for a translate halving both measures.
/// Failure is a diagnostic, never a proof of non-existence.
SolveOutcome solve_equipartition(const Fan& fan, const Measure& m1, const Measure& m2,
                                 double tol = 1e-8);

struct DirectionGap {
    std::size_t j = 0;
    double gap = 0.0;  // distance between the two halving-offset intervals
    HalvingLine line1;
    HalvingLine line2;
};

/// Per-direction check that no line parallel to a fan ray halves both
/// measures: holds when every direction's halving intervals are disjoint by
/// more than tol.
struct HalvingHypothesisReport {
    std::vector<DirectionGap> gaps;
    bool holds = false;
    double min_gap = 0.0;
    std::optional<std::size_t> violating_j;
};

HalvingHypothesisReport check_halving_line_hypothesis(const Fan& fan, const Measure& m1, const Measure& m2,
                                         double tol = 1e-8);

}  // namespace fancut
