#ifndef SYMCURVE_TOLERANCES_HPP
#define SYMCURVE_TOLERANCES_HPP

namespace symcurve {

/// Relative tolerances shared by the detection pipeline.  All coefficient
/// tests scale with the curve's maximal coefficient norm, all vertex tests
/// with the bounding-box diagonal.
struct Tolerances {
    double coef = 1e-9;       // "is zero / is circle" coefficient tests
    double geom = 1e-9;       // point and collinearity comparisons
    double angular = 1e-7;    // candidate t0 matching across grids/pairs
    double match = 1e-8;      // vertex matching (x bbox diagonal)
    double hausdorff = 1e-6;  // cloud confirmation (x bbox diagonal)

    /// Uniformly loosened/tightened copy (SYMCURVE_TOL multiplier).
    Tolerances scaled(double factor) const {
        Tolerances t = *this;
        t.coef *= factor;
        t.geom *= factor;
        t.angular *= factor;
        t.match *= factor;
        t.hausdorff *= factor;
        return t;
    }
};

}  // namespace symcurve

#endif
