#ifndef SYMCURVE_SVG_HPP
#define SYMCURVE_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcurve/geometry.hpp"
#include "symcurve/trig_curve.hpp"

namespace symcurve {

struct SvgOptions {
    bool axes = false;        // overlay detected symmetry axes + center
    int harmonics = 0;        // overlay the first j component ellipses
    int min_samples = 512;    // curve sampled at max(min_samples, 32*N)
};

/// Schematic figure: curve in blue, component ellipses in green, symmetry
/// axes in red, y-up coordinate frame, 5% margin.  Deterministic output.
std::string render_curve_svg(const TrigCurve& c, const SvgOptions& opt = {});

/// Same frame conventions for a closed polyline.
std::string render_polyline_svg(const std::vector<Point2>& vertices,
                                const SvgOptions& opt = {});

}  // namespace symcurve

#endif
