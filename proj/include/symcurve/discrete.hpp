#ifndef SYMCURVE_DISCRETE_HPP
#define SYMCURVE_DISCRETE_HPP

#include <vector>

#include "symcurve/report.hpp"
#include "symcurve/symmetry.hpp"
#include "symcurve/trig_curve.hpp"

namespace symcurve {

/// A closed polyline v_0, ..., v_{n-1} (v_n = v_0 implicit).  Construction
/// removes consecutive duplicates and prunes middle vertices of collinear
/// triples, so the stored curve is in canonical position for Algorithm
/// steps that compare vertices.
class DiscreteCurve {
public:
    explicit DiscreteCurve(std::vector<Point2> points, double eps_geom = 1e-9);

    /// Bypass pruning; used by the smoothing operator, which must preserve
    /// the vertex count to stay the exact linear map S.
    static DiscreteCurve unchecked(std::vector<Point2> points);

    const std::vector<Point2>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const Point2& vertex(int i) const;  // index taken mod n
    double bbox_diag() const { return bbox_diag_; }
    Point2 centroid() const;

private:
    DiscreteCurve() = default;

    std::vector<Point2> vertices_;
    double bbox_diag_ = 0.0;
};

/// Constructor alias matching the operation name.
DiscreteCurve prune_collinear(std::vector<Point2> points, double eps_geom = 1e-9);

/// T_C: trigonometric interpolant of the vertices at uniform nodes.
TrigCurve interpolant(const DiscreteCurve& c);

/// Step-3 vertex test: phi maps the vertex sequence onto itself (shifted
/// for direct isometries, shifted and reversed for indirect ones).
bool verify_on_vertices(const Isometry2& iso, const DiscreteCurve& c,
                        double eps_match_rel = 1e-8);

/// Algorithm: interpolate, detect Sym(T_C), keep the elements that fix the
/// vertex set, assemble the largest consistent subgroup.
SymmetryReport detect(const DiscreteCurve& c, const Tolerances& tol = Tolerances{});

/// Independent O(n^2) oracle: tries every vertex shift and both
/// orientations directly on the polyline.
SymmetryGroup brute_force_group(const DiscreteCurve& c, double eps_match_rel = 1e-8);

/// `steps` applications of S = I - lambda*L (cyclic neighbors, no
/// re-pruning between steps).
DiscreteCurve laplacian_smooth(const DiscreteCurve& c, double lambda, int steps);

/// [T_C, T^1_C, ..., T^max_ell_C].
std::vector<TrigCurve> filtered_interpolants(const DiscreteCurve& c, int max_ell);

}  // namespace symcurve

#endif
