#include "symcurve/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "symcurve/discrete.hpp"
#include "symcurve/symmetry.hpp"

namespace symcurve {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v + 0.0);  // normalize -0
    return buf;
}

struct Frame {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void include(const Point2& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double diag() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

// y-up frame: emitted y coordinates are negated and the viewBox fitted to
// the negated box.
void emit_polyline(std::ostringstream& out, const std::vector<Point2>& pts,
                   const char* color, double width, bool closed) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << fmt(width) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << fmt(pts[i].x) << ',' << fmt(-pts[i].y);
    }
    if (closed && !pts.empty()) out << ' ' << fmt(pts[0].x) << ',' << fmt(-pts[0].y);
    out << "\"/>\n";
}

std::string assemble(const Frame& f, const std::string& body) {
    const double mx = 0.05 * (f.xmax - f.xmin + 1e-12);
    const double my = 0.05 * (f.ymax - f.ymin + 1e-12);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(f.xmin - mx) << ' '
        << fmt(-(f.ymax + my)) << ' ' << fmt(f.xmax - f.xmin + 2 * mx) << ' '
        << fmt(f.ymax - f.ymin + 2 * my) << "\">\n"
        << body << "</svg>\n";
    return out.str();
}

void emit_axes(std::ostringstream& out, Frame& f, const SymmetryGroup& g, double stroke) {
    const Point2 c = g.center();
    const double reach = f.diag();
    for (double angle : g.axis_angles()) {
        const Point2 dir(std::cos(angle), std::sin(angle));
        const Point2 p0 = c - reach * dir, p1 = c + reach * dir;
        out << "  <line stroke=\"red\" stroke-width=\"" << fmt(stroke) << "\" x1=\""
            << fmt(p0.x) << "\" y1=\"" << fmt(-p0.y) << "\" x2=\"" << fmt(p1.x) << "\" y2=\""
            << fmt(-p1.y) << "\"/>\n";
        f.include(p0);
        f.include(p1);
    }
    out << "  <circle fill=\"red\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y) << "\" r=\""
        << fmt(2.0 * stroke) << "\"/>\n";
}

}  // namespace

std::string render_curve_svg(const TrigCurve& c, const SvgOptions& opt) {
    const int samples = std::max(opt.min_samples, 32 * c.degree());
    std::vector<Point2> pts;
    pts.reserve(samples + 1);
    Frame f;
    for (int i = 0; i <= samples; ++i) {
        const Point2 p = c.evaluate(kTwoPi * i / samples);
        pts.push_back(p);
        f.include(p);
    }
    const double stroke = 0.004 * std::max(f.diag(), 1e-12);

    std::ostringstream body;
    emit_polyline(body, pts, "blue", stroke, false);

    for (int k = 1; k <= std::min(opt.harmonics, c.degree()); ++k) {
        std::vector<Point2> ellipse;
        ellipse.reserve(129);
        for (int i = 0; i <= 128; ++i) {
            const Point2 p = c.a0() + c.evaluate_harmonic(k, kTwoPi * i / (128 * k));
            ellipse.push_back(p);
            f.include(p);
        }
        emit_polyline(body, ellipse, "green", 0.6 * stroke, true);
    }

    if (opt.axes) {
        const CurveDetection det = detect_symmetry_group(c);
        emit_axes(body, f, det.group, stroke);
    }
    return assemble(f, body.str());
}

std::string render_polyline_svg(const std::vector<Point2>& vertices, const SvgOptions& opt) {
    Frame f;
    for (const Point2& p : vertices) f.include(p);
    const double stroke = 0.004 * std::max(f.diag(), 1e-12);

    std::ostringstream body;
    emit_polyline(body, vertices, "blue", stroke, true);
    if (opt.axes) {
        const SymmetryReport rep = detect(DiscreteCurve(vertices));
        emit_axes(body, f, rep.group, stroke);
    }
    return assemble(f, body.str());
}

}  // namespace symcurve
