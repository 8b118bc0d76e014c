#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fancut/certify.hpp"
#include "fancut/halving.hpp"
#include "fancut/solver.hpp"

namespace fancut {

inline constexpr const char* kToolVersion = "fancut 1.0.0";

struct ProblemOptions {
    double tol = 1e-8;
    std::optional<double> grid_step;  // defaults to support scale / 2000
    double trunc_sigmas = 8.0;
};

struct Problem {
    Fan fan;
    Measure m1;
    Measure m2;
    ProblemOptions options;
};

/// Strict parser: unknown fields are rejected with a field-addressed message.
Problem parse_problem(const std::string& json_text);

/// Canonical serialization; parse(serialize(parse(x))) == parse(x).
std::string serialize_problem(const Problem& p);

double default_grid_step(const Problem& p);

std::string solve_report_json(const Problem& p, const SolveOutcome& outcome,
                              const std::string& command, std::optional<double> timing_ms);

std::string verify_report_json(const Problem& p, const VerifyOutcome& outcome,
                               const std::string& command, std::optional<double> timing_ms);

std::string hypothesis_report_json(const Problem& p, const HalvingHypothesisReport& rep,
                                   const std::string& command, std::optional<double> timing_ms);

std::string trace_csv(const std::vector<CurvePoint>& points, const std::vector<bool>& bracketed);

struct PlotInput {
    Problem problem;
    std::optional<EquipartitionResult> solution;
};

/// Accepts either a problem file or a run report carrying a problem echo.
PlotInput parse_plot_input(const std::string& json_text);

}  // namespace fancut
