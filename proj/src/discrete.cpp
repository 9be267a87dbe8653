#include "symcurve/discrete.hpp"

#include "symcurve/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symcurve {

namespace {

double bbox_diagonal(const std::vector<Point2>& pts) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = xmax;
    for (const Point2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

// Distance of b from the line through a and c.
double collinearity_defect(const Point2& a, const Point2& b, const Point2& c) {
    const Point2 u = c - a;
    const double len = norm(u);
    if (len == 0.0) return distance(b, a);
    return std::fabs(cross(u, b - a)) / len;
}

}  // namespace

DiscreteCurve::DiscreteCurve(std::vector<Point2> points, double eps_geom) {
    bbox_diag_ = bbox_diagonal(points);
    const double eps = eps_geom * bbox_diag_;

    std::vector<Point2> v = std::move(points);
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() >= 3;) {
            const std::size_t n = v.size();
            const Point2& prev = v[(i + n - 1) % n];
            const Point2& cur = v[i];
            const Point2& next = v[(i + 1) % n];
            if (distance(cur, next) <= eps || collinearity_defect(prev, cur, next) <= eps) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }
    }
    if (v.size() < 3) throw std::domain_error("degenerate polyline");
    vertices_ = std::move(v);
    bbox_diag_ = bbox_diagonal(vertices_);
}

DiscreteCurve DiscreteCurve::unchecked(std::vector<Point2> points) {
    if (points.size() < 3) throw std::domain_error("degenerate polyline");
    DiscreteCurve c;
    c.vertices_ = std::move(points);
    c.bbox_diag_ = bbox_diagonal(c.vertices_);
    return c;
}

const Point2& DiscreteCurve::vertex(int i) const {
    const int n = size();
    return vertices_[((i % n) + n) % n];
}

Point2 DiscreteCurve::centroid() const {
    Point2 c(0, 0);
    for (const Point2& p : vertices_) c += p;
    return c * (1.0 / size());
}

DiscreteCurve prune_collinear(std::vector<Point2> points, double eps_geom) {
    return DiscreteCurve(std::move(points), eps_geom);
}

TrigCurve interpolant(const DiscreteCurve& c) { return trig_interpolate(c.vertices()); }

bool verify_on_vertices(const Isometry2& iso, const DiscreteCurve& c,
                        double eps_match_rel) {
    const int n = c.size();
    const double eps = eps_match_rel * c.bbox_diag();
    const Point2 image0 = iso.apply(c.vertex(0));
    const int dir = iso.direct() ? 1 : -1;
    for (int j = 0; j < n; ++j) {
        if (distance(image0, c.vertex(j)) > eps) continue;
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
            ok = distance(iso.apply(c.vertex(i)), c.vertex(j + dir * i)) <= eps;
        if (ok) return true;
    }
    return false;
}

SymmetryReport detect(const DiscreteCurve& c, const Tolerances& tol) {
    const TrigCurve tc = interpolant(c);
    const CurveDetection cd = detect_symmetry_group(tc, tol);

    SymmetryReport r;
    r.input_kind = "discrete_curve";
    r.interpolant_degree = tc.degree();
    r.tolerances = tol;
    r.notes = cd.notes;
    r.syzygy_parameters = cd.syzygy_parameters;
    r.rejected_candidates = cd.rejected_candidates;

    if (cd.group.kind() == GroupKind::FullCircle) {
        // Interpolant is a circle, so the polyline is a regular n-gon.
        const int n = c.size();
        const Point2 center = tc.a0();
        const Point2 v0 = c.vertex(0) - center;
        const SymmetryGroup g =
            SymmetryGroup::dihedral(n, center, normalize_axis_angle(std::atan2(v0.y, v0.x)));
        r.group = g;
        r.witnesses = g.elements();
        r.notes.push_back("regular " + std::to_string(n) + "-gon");
        return r;
    }

    const SymmetryGroup& cand = cd.group;
    const int m = cand.m();
    std::vector<char> rot_keep(m, 0), refl_keep;
    int step3_rejected = 0;
    for (int j = 0; j < m; ++j) {
        rot_keep[j] =
            verify_on_vertices(Isometry2::rotation(cand.center(), kTwoPi * j / m), c, tol.match);
        if (!rot_keep[j]) ++step3_rejected;
    }
    if (cand.kind() == GroupKind::Dihedral) {
        refl_keep.assign(m, 0);
        for (int j = 0; j < m; ++j) {
            refl_keep[j] = verify_on_vertices(
                Isometry2::reflection(cand.center(), *cand.axis_base_angle() + j * kPi / m), c,
                tol.match);
            if (!refl_keep[j]) ++step3_rejected;
        }
    }

    r.group = largest_surviving_subgroup(cand, rot_keep, refl_keep);
    if (step3_rejected > 0) {
        r.rejected_candidates += step3_rejected;
        r.notes.push_back(std::to_string(step3_rejected) +
                          " interpolant symmetries rejected on the vertices");
    }
    if (r.group.m() >= 2)
        r.witnesses.push_back(Isometry2::rotation(r.group.center(), kTwoPi / r.group.m()));
    if (r.group.kind() == GroupKind::Dihedral)
        for (int j = 0; j < r.group.m(); ++j)
            r.witnesses.push_back(Isometry2::reflection(
                r.group.center(), *r.group.axis_base_angle() + j * kPi / r.group.m()));
    return r;
}

SymmetryGroup brute_force_group(const DiscreteCurve& c, double eps_match_rel) {
    const int n = c.size();
    const double eps = eps_match_rel * c.bbox_diag();
    int rotations = 0;
    std::vector<double> axes;

    for (int j = 0; j < n; ++j) {
        const auto direct =
            Isometry2::direct_from_pairs(c.vertex(0), c.vertex(1), c.vertex(j), c.vertex(j + 1), eps);
        if (direct && verify_on_vertices(*direct, c, eps_match_rel)) ++rotations;

        const auto indirect = Isometry2::indirect_from_pairs(c.vertex(0), c.vertex(1),
                                                             c.vertex(j), c.vertex(j - 1), eps);
        if (indirect && verify_on_vertices(*indirect, c, eps_match_rel))
            axes.push_back(indirect->reflection_axis_angle());
    }

    const Point2 center = c.centroid();
    if (axes.empty()) return SymmetryGroup::cyclic(rotations, center);
    return SymmetryGroup::dihedral(rotations, center, *std::min_element(axes.begin(), axes.end()));
}

DiscreteCurve laplacian_smooth(const DiscreteCurve& c, double lambda, int steps) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("laplacian_smooth: lambda must lie in (0,1)");
    if (steps < 0) throw std::invalid_argument("laplacian_smooth: steps must be >= 0");
    const int n = c.size();
    std::vector<Point2> v = c.vertices();
    std::vector<Point2> next(n);
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i < n; ++i)
            next[i] = (1.0 - lambda) * v[i] +
                      (lambda / 2.0) * (v[(i + n - 1) % n] + v[(i + 1) % n]);
        v.swap(next);
    }
    return DiscreteCurve::unchecked(std::move(v));
}

std::vector<TrigCurve> filtered_interpolants(const DiscreteCurve& c, int max_ell) {
    const TrigCurve tc = interpolant(c);
    if (max_ell >= tc.degree()) throw std::domain_error("filtering would erase curve");
    std::vector<TrigCurve> out;
    out.reserve(max_ell + 1);
    for (int ell = 0; ell <= max_ell; ++ell) out.push_back(filter(tc, ell));
    return out;
}

}  // namespace symcurve
