#ifndef SYMCURVE_CLOUD_HPP
#define SYMCURVE_CLOUD_HPP

#include <vector>

#include "symcurve/discrete.hpp"

namespace symcurve {

/// An unorganized finite planar point set; duplicates are collapsed on
/// ingestion at eps_geom * bbox diagonal.
class PointCloud {
public:
    explicit PointCloud(std::vector<Point2> points, double eps_geom = 1e-9);

    const std::vector<Point2>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    double bbox_diag() const { return bbox_diag_; }

private:
    std::vector<Point2> points_;
    double bbox_diag_ = 0.0;
};

/// Counterclockwise strictly convex boundary of the hull (monotone chain;
/// collinear boundary points dropped).  Throws std::domain_error when all
/// points are collinear.
DiscreteCurve convex_hull(const PointCloud& x);

/// Symmetric Hausdorff distance of two finite sets (max of the two
/// directed distances).  Throws on empty input.
double hausdorff(const PointCloud& x, const PointCloud& y);
double hausdorff(const std::vector<Point2>& x, const std::vector<Point2>& y);

/// Hull boundary -> interpolant -> Sym(T) candidates, confirmed point by
/// point with the Hausdorff zero test.
SymmetryReport detect_cloud(const PointCloud& x, const Tolerances& tol = Tolerances{});

}  // namespace symcurve

#endif
