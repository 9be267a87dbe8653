// symcurve: symmetry groups of trigonometric curves, closed polylines and
// planar point clouds.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcurve/cloud.hpp"
#include "symcurve/discrete.hpp"
#include "symcurve/interpolate.hpp"
#include "symcurve/io.hpp"
#include "symcurve/report.hpp"
#include "symcurve/svg.hpp"
#include "symcurve/symmetry.hpp"

namespace {

using namespace symcurve;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;      // I/O or parse failure
constexpr int kExitDegenerate = 2;  // degenerate input

Tolerances make_tolerances(double coef, double geom, double haus) {
    Tolerances t;
    t.coef = coef;
    t.geom = geom;
    t.hausdorff = haus;
    if (const char* env = std::getenv("SYMCURVE_TOL")) {
        const double factor = std::atof(env);
        if (factor > 0) t = t.scaled(factor);
    }
    return t;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetry detection for trigonometric curves, closed "
                 "discrete curves and point clouds"};
    app.require_subcommand(1);

    double tol_coef = 1e-9, tol_geom = 1e-9, tol_haus = 1e-6;
    app.add_option("--tol-coef", tol_coef, "relative coefficient tolerance");
    app.add_option("--tol-geom", tol_geom, "relative geometric tolerance");
    app.add_option("--tol-hausdorff", tol_haus, "relative Hausdorff tolerance");

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "detect the symmetry group");
    std::string curve_file, cloud_file, trig_file;
    auto* opt_curve = detect_cmd->add_option("--curve", curve_file, "CSV polyline");
    auto* opt_cloud = detect_cmd->add_option("--cloud", cloud_file, "CSV point cloud");
    auto* opt_trig = detect_cmd->add_option("--trig", trig_file, "JSON trigonometric curve");
    opt_curve->excludes(opt_cloud)->excludes(opt_trig);
    opt_cloud->excludes(opt_trig);

    // interpolate
    auto* interp_cmd = app.add_subcommand("interpolate", "trigonometric interpolation of a CSV polyline");
    std::string interp_in, interp_out;
    interp_cmd->add_option("input", interp_in, "CSV polyline")->required();
    interp_cmd->add_option("--out", interp_out, "output curve JSON")->required();

    // smooth
    auto* smooth_cmd = app.add_subcommand("smooth", "Laplacian smoothing of a CSV polyline");
    std::string smooth_in, smooth_out;
    double lambda = 0.5;
    int steps = 1;
    smooth_cmd->add_option("input", smooth_in, "CSV polyline")->required();
    smooth_cmd->add_option("--lambda", lambda, "smoothing weight in (0,1)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
    smooth_cmd->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
    smooth_cmd->add_option("--out", smooth_out, "output CSV")->required();

    // filter
    auto* filter_cmd = app.add_subcommand("filter", "drop the top harmonics of a curve JSON");
    std::string filter_in, filter_out;
    int drop = 0;
    filter_cmd->add_option("input", filter_in, "curve JSON")->required();
    filter_cmd->add_option("--drop", drop, "number of top harmonics to drop")
        ->check(CLI::NonNegativeNumber);
    filter_cmd->add_option("--out", filter_out, "output curve JSON")->required();

    // render
    auto* render_cmd = app.add_subcommand("render", "schematic SVG of a curve or polyline");
    std::string render_in, render_out;
    bool overlay_axes = false;
    int overlay_harmonics = 0;
    render_cmd->add_option("input", render_in, "curve JSON or CSV polyline")->required();
    render_cmd->add_option("--out", render_out, "output SVG")->required();
    render_cmd->add_flag("--axes", overlay_axes, "overlay detected symmetry axes");
    render_cmd->add_option("--harmonics", overlay_harmonics,
                           "overlay the first j component ellipses");

    CLI11_PARSE(app, argc, argv);
    const Tolerances tol = make_tolerances(tol_coef, tol_geom, tol_haus);

    try {
        if (*detect_cmd) {
            SymmetryReport report;
            if (*opt_trig) {
                const TrigCurve c = read_curve_json_file(trig_file);
                const CurveDetection d = detect_symmetry_group(c, tol);
                report.input_kind = "trig_curve";
                report.group = d.group;
                report.witnesses = d.witnesses;
                report.interpolant_degree = c.degree();
                report.rejected_candidates = d.rejected_candidates;
                report.syzygy_parameters = d.syzygy_parameters;
                report.tolerances = tol;
                report.notes = d.notes;
            } else if (*opt_curve) {
                report = detect(DiscreteCurve(read_points_csv_file(curve_file), tol.geom), tol);
            } else if (*opt_cloud) {
                report = detect_cloud(PointCloud(read_points_csv_file(cloud_file), tol.geom), tol);
            } else {
                std::cerr << "detect: one of --curve/--cloud/--trig is required\n";
                return kExitError;
            }
            std::cout << report_to_json(report) << "\n";
        } else if (*interp_cmd) {
            const auto points = read_points_csv_file(interp_in);
            write_curve_json_file(interp_out, interpolant(DiscreteCurve(points, tol.geom)));
        } else if (*smooth_cmd) {
            const auto points = read_points_csv_file(smooth_in);
            const DiscreteCurve smoothed =
                laplacian_smooth(DiscreteCurve(points, tol.geom), lambda, steps);
            write_points_csv_file(smooth_out, smoothed.vertices());
        } else if (*filter_cmd) {
            const TrigCurve c = read_curve_json_file(filter_in);
            write_curve_json_file(filter_out, filter(c, drop));
        } else if (*render_cmd) {
            SvgOptions opt;
            opt.axes = overlay_axes;
            opt.harmonics = overlay_harmonics;
            const bool json_input = render_in.size() >= 5 &&
                                    render_in.compare(render_in.size() - 5, 5, ".json") == 0;
            if (json_input)
                write_text_file(render_out, render_curve_svg(read_curve_json_file(render_in), opt));
            else
                write_text_file(render_out,
                                render_polyline_svg(read_points_csv_file(render_in), opt));
        }
    } catch (const std::domain_error& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
