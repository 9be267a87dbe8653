#include "symcurve/cloud.hpp"

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

double directed_hausdorff(const std::vector<Point2>& x, const std::vector<Point2>& y) {
    double worst = 0.0;
    for (const Point2& p : x) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point2& q : y) best = std::min(best, distance(p, q));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

PointCloud::PointCloud(std::vector<Point2> points, double eps_geom) {
    if (points.empty()) throw std::domain_error("empty point cloud");
    bbox_diag_ = bbox_diagonal(points);
    const double eps = eps_geom * bbox_diag_;
    for (const Point2& p : points) {
        bool dup = false;
        for (const Point2& q : points_)
            if (distance(p, q) <= eps) { dup = true; break; }
        if (!dup) points_.push_back(p);
    }
}

DiscreteCurve convex_hull(const PointCloud& x) {
    std::vector<Point2> pts = x.points();
    if (pts.size() < 3) throw std::domain_error("degenerate hull");
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    const double bb = x.bbox_diag();
    const double thresh = 1e-9 * bb * bb;  // relative orientation predicate

    const auto turn = [](const Point2& o, const Point2& a, const Point2& b) {
        return cross(a - o, b - o);
    };

    const std::size_t n = pts.size();
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= thresh) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= thresh) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw std::domain_error("degenerate hull");
    return DiscreteCurve(std::move(hull));
}

double hausdorff(const std::vector<Point2>& x, const std::vector<Point2>& y) {
    if (x.empty() || y.empty()) throw std::domain_error("hausdorff: empty input");
    return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

double hausdorff(const PointCloud& x, const PointCloud& y) {
    return hausdorff(x.points(), y.points());
}

SymmetryReport detect_cloud(const PointCloud& x, const Tolerances& tol) {
    const DiscreteCurve boundary = convex_hull(x);
    const TrigCurve tc = interpolant(boundary);
    const CurveDetection cd = detect_symmetry_group(tc, tol);

    SymmetryReport r;
    r.input_kind = "point_cloud";
    r.interpolant_degree = tc.degree();
    r.tolerances = tol;
    r.notes = cd.notes;
    r.syzygy_parameters = cd.syzygy_parameters;
    r.rejected_candidates = cd.rejected_candidates;

    SymmetryGroup cand = cd.group;
    if (cand.kind() == GroupKind::FullCircle) {
        // Hull is a regular n-gon; its dihedral group is the candidate set.
        const Point2 center = tc.a0();
        const Point2 v0 = boundary.vertex(0) - center;
        cand = SymmetryGroup::dihedral(boundary.size(), center,
                                       normalize_axis_angle(std::atan2(v0.y, v0.x)));
        r.notes.push_back("hull is a regular " + std::to_string(boundary.size()) + "-gon");
    }

    const double eps_h = tol.hausdorff * x.bbox_diag();
    const auto survives = [&](const Isometry2& phi) {
        std::vector<Point2> image;
        image.reserve(x.size());
        for (const Point2& p : x.points()) image.push_back(phi.apply(p));
        return hausdorff(x.points(), image) <= eps_h;
    };

    const int m = cand.m();
    std::vector<char> rot_keep(m, 0), refl_keep;
    int rejected = 0;
    for (int j = 0; j < m; ++j) {
        rot_keep[j] = survives(Isometry2::rotation(cand.center(), kTwoPi * j / m));
        if (!rot_keep[j]) ++rejected;
    }
    if (cand.kind() == GroupKind::Dihedral) {
        refl_keep.assign(m, 0);
        for (int j = 0; j < m; ++j) {
            refl_keep[j] = survives(
                Isometry2::reflection(cand.center(), *cand.axis_base_angle() + j * kPi / m));
            if (!refl_keep[j]) ++rejected;
        }
    }

    r.group = largest_surviving_subgroup(cand, rot_keep, refl_keep);
    if (rejected > 0) {
        r.rejected_candidates += rejected;
        r.notes.push_back(std::to_string(rejected) +
                          " hull-interpolant symmetries rejected by the Hausdorff test");
    }
    if (r.group.m() == 1 && r.group.kind() != GroupKind::Dihedral)
        r.notes.push_back("candidate set limited the result to the trivial group");
    if (r.group.m() >= 2)
        r.witnesses.push_back(Isometry2::rotation(r.group.center(), kTwoPi / r.group.m()));
    if (r.group.kind() == GroupKind::Dihedral)
        for (int j = 0; j < r.group.m(); ++j)
            r.witnesses.push_back(Isometry2::reflection(
                r.group.center(), *r.group.axis_base_angle() + j * kPi / r.group.m()));
    return r;
}

}  // namespace symcurve
