#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fancut/certify.hpp"
#include "fancut/problem_io.hpp"
#include "fancut/svg.hpp"

namespace {

using namespace fancut;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDiagnostic = 2;
constexpr int kExitRefutation = 3;
constexpr int kExitGridTooCoarse = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(errc::parse_error, "cannot write '" + out_path + "'");
    out << text;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::optional<double> maybe_timing(bool enabled, const Timer& t) {
    if (!enabled) return std::nullopt;
    return t.ms();
}

int run_solve(const std::string& file, std::optional<double> tol, const std::string& out,
              bool timings) {
    Problem p = parse_problem(read_file(file));
    if (tol) p.options.tol = *tol;
    Timer timer;
    SolveOutcome outcome = solve_equipartition(p.fan, p.m1, p.m2, p.options.tol);
    emit(out, solve_report_json(p, outcome, "solve", maybe_timing(timings, timer)));
    if (std::holds_alternative<EquipartitionResult>(outcome)) return kExitOk;
    std::cerr << "no equipartition found (diagnostic, not a proof of non-existence)\n";
    return kExitDiagnostic;
}

Family guess_family(const Problem& p) {
    const bool g1 = std::holds_alternative<GaussianMeasure>(p.m1);
    const bool g2 = std::holds_alternative<GaussianMeasure>(p.m2);
    if (g1 && g2) return Family::gaussian_pair;
    return Family::fig1_4fan;  // disk-blob families share one verification path
}

int run_certify(const std::string& file, std::optional<double> grid_step, std::optional<double> tol,
                const std::string& out, bool timings) {
    Problem p = parse_problem(read_file(file));
    if (tol) p.options.tol = *tol;
    if (grid_step) p.options.grid_step = *grid_step;

    CounterexampleConfig cfg;
    cfg.fan = p.fan;
    cfg.m1 = p.m1;
    cfg.m2 = p.m2;
    cfg.family = guess_family(p);
    if (cfg.family != Family::gaussian_pair) {
        if (!std::holds_alternative<DiskBlobMeasure>(p.m1) ||
            !std::holds_alternative<DiskBlobMeasure>(p.m2))
            throw Error(errc::invalid_measure,
                        "certify expects two disk-blob measures or two gaussians");
    }

    const double step = p.options.grid_step ? *p.options.grid_step : default_grid_step(p);
    Timer timer;
    VerifyOutcome outcome = verify_no_equipartition(cfg, step, p.options.tol);
    emit(out, verify_report_json(p, outcome, "certify", maybe_timing(timings, timer)));
    return std::holds_alternative<Certificate>(outcome) ? kExitOk : kExitRefutation;
}

int run_hypothesis(const std::string& file, std::optional<double> tol, const std::string& out,
                   bool timings) {
    Problem p = parse_problem(read_file(file));
    if (tol) p.options.tol = *tol;
    Timer timer;
    HalvingHypothesisReport rep = check_halving_line_hypothesis(p.fan, p.m1, p.m2, p.options.tol);
    emit(out, hypothesis_report_json(p, rep, "hypothesis", maybe_timing(timings, timer)));
    return kExitOk;
}

int run_trace(const std::string& file, int measure, int j, int samples, const std::string& out) {
    Problem p = parse_problem(read_file(file));
    if (measure != 1 && measure != 2) throw Error(errc::parse_error, "--measure must be 1 or 2");
    if (samples < 1) throw Error(errc::parse_error, "--samples must be at least 1");
    const Measure& m = measure == 1 ? p.m1 : p.m2;
    if (j < 1 || static_cast<std::size_t>(j) > p.fan.size())
        throw Error(errc::index_out_of_range, "--j must lie in 1.." + std::to_string(p.fan.size()));

    const WedgeFrame frame = wedge_frame(p.fan, j - 1);
    const SupportBounds sb = support_bounds(m);
    const double s_center = dot(sb.center, frame.s_axis);
    const double span = 10.0 * sb.radius;

    std::vector<CurvePoint> points;
    std::vector<bool> bracketed;
    for (int i = 0; i < samples; ++i) {
        const double s =
            samples == 1 ? s_center : s_center + span * (2.0 * i / (samples - 1) - 1.0);
        try {
            points.push_back(curve_point(m, p.fan, j - 1, s, p.options.tol));
            bracketed.push_back(true);
        } catch (const Error& e) {
            if (e.code() != errc::no_bracket) throw;
            points.push_back(CurvePoint{s, {0, 0}, 0});
            bracketed.push_back(false);
        }
    }
    emit(out, trace_csv(points, bracketed));
    return kExitOk;
}

int run_examples(const std::string& family, double scale, std::optional<double> blob_radius,
                 int k, const std::string& angles_csv, const std::string& out) {
    const double rb = blob_radius ? *blob_radius : scale / 200.0;
    CounterexampleConfig cfg;
    if (family == "fig1") {
        cfg = build_fig1_4fan(scale, rb);
    } else if (family == "polygon2k") {
        cfg = build_polygon_2kfan(k, scale, rb);
    } else if (family == "arb4fan") {
        std::vector<Vec2> dirs;
        std::stringstream ss(angles_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            dirs.push_back(rotate({1, 0}, std::stod(item) * 3.14159265358979323846 / 180.0));
        cfg = build_arbitrary_4fan(fan_from_directions(dirs), scale, rb);
    } else if (family == "gaussian-pair") {
        cfg = build_gaussian_pair();
    } else {
        throw Error(errc::parse_error,
                    "unknown family '" + family +
                        "'; known families: fig1, polygon2k, arb4fan, gaussian-pair");
    }

    Problem p;
    p.fan = cfg.fan;
    p.m1 = cfg.m1;
    p.m2 = cfg.m2;
    p.options.grid_step = cfg.scale / 2000.0;
    emit(out, serialize_problem(p));
    return kExitOk;
}

int run_plot(const std::string& file, const std::string& curve_file, const std::string& out) {
    PlotInput in = parse_plot_input(read_file(file));
    std::vector<Vec2> overlay;
    if (!curve_file.empty()) {
        std::istringstream csv(read_file(curve_file));
        std::string line;
        std::getline(csv, line);  // header
        while (std::getline(csv, line)) {
            double s, x, y, m;
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &s, &x, &y, &m) == 4 &&
                std::isfinite(x) && std::isfinite(y))
                overlay.push_back({x, y});
        }
    }
    emit(out, render_svg(in.problem, in.solution, overlay));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fancut: halving translates of fan angles over two planar measures"};
    app.require_subcommand(1);

    std::string file, out, curve_file, angles_csv = "0,75,170,260", family;
    std::optional<double> tol, grid_step, blob_radius;
    double scale = 1.0;
    int measure = 1, j = 1, samples = 101, k = 2;
    bool timings = false;

    auto* solve = app.add_subcommand("solve", "find a halving translate of some fan angle");
    solve->add_option("problem", file)->required();
    solve->add_option("--tol", tol);
    solve->add_option("--out", out);
    solve->add_flag("--timings", timings);

    auto* certify = app.add_subcommand("certify", "certify that no halving translate exists");
    certify->add_option("problem", file)->required();
    certify->add_option("--grid-step", grid_step);
    certify->add_option("--tol", tol);
    certify->add_option("--out", out);
    certify->add_flag("--timings", timings);

    auto* hypo = app.add_subcommand("hypothesis", "check the parallel-halving-line hypothesis");
    hypo->add_option("problem", file)->required();
    hypo->add_option("--tol", tol);
    hypo->add_option("--out", out);
    hypo->add_flag("--timings", timings);

    auto* trace = app.add_subcommand("trace", "trace a halving curve to CSV");
    trace->add_option("problem", file)->required();
    trace->add_option("--measure", measure);
    trace->add_option("--j", j)->required();
    trace->add_option("--samples", samples);
    trace->add_option("--out", out);

    auto* examples = app.add_subcommand("examples", "emit bundled example problems");
    auto* build = examples->add_subcommand("build", "build a family instance");
    build->add_option("family", family)->required();
    build->add_option("--scale", scale);
    build->add_option("--blob-radius", blob_radius);
    build->add_option("--k", k);
    build->add_option("--angles", angles_csv);
    build->add_option("--out", out);
    examples->require_subcommand(1);

    auto* plot = app.add_subcommand("plot", "render a problem or run report as SVG");
    plot->add_option("input", file)->required();
    plot->add_option("--curve", curve_file);
    plot->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(solve)) return run_solve(file, tol, out, timings);
        if (app.got_subcommand(certify)) return run_certify(file, grid_step, tol, out, timings);
        if (app.got_subcommand(hypo)) return run_hypothesis(file, tol, out, timings);
        if (app.got_subcommand(trace)) return run_trace(file, measure, j, samples, out);
        if (app.got_subcommand(examples)) return run_examples(family, scale, blob_radius, k, angles_csv, out);
        if (app.got_subcommand(plot)) return run_plot(file, curve_file, out);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == errc::grid_too_coarse ? kExitGridTooCoarse : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
