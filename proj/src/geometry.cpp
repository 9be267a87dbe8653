#include "symcurve/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace symcurve {

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;  // fmod round-off at the seam
    return a;
}

double normalize_axis_angle(double a) {
    a = std::fmod(a, kPi);
    if (a < 0) a += kPi;
    if (a >= kPi) a = 0.0;
    return a;
}

double angle_distance(double a, double b, double period) {
    double d = std::fmod(std::fabs(a - b), period);
    return std::min(d, period - d);
}

Isometry2::Isometry2(double a11, double a12, double a21, double a22, const Point2& b,
                     bool check)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22), b_(b) {
    det_ = a11_ * a22_ - a12_ * a21_;
    if (check) {
        const double c1 = a11_ * a11_ + a21_ * a21_ - 1.0;
        const double c2 = a12_ * a12_ + a22_ * a22_ - 1.0;
        const double c3 = a11_ * a12_ + a21_ * a22_;
        if (std::fabs(c1) > 1e-12 || std::fabs(c2) > 1e-12 || std::fabs(c3) > 1e-12)
            throw std::invalid_argument("Isometry2: matrix is not orthogonal");
        if (std::fabs(std::fabs(det_) - 1.0) > 1e-12)
            throw std::invalid_argument("Isometry2: determinant is not +/-1");
    }
}

Isometry2 Isometry2::identity() {
    return Isometry2(1, 0, 0, 1, Point2(0, 0), false);
}

Isometry2 Isometry2::translation(const Point2& b) {
    return Isometry2(1, 0, 0, 1, b, false);
}

Isometry2 Isometry2::rotation(const Point2& center, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    // b = center - A*center
    Point2 b(center.x - (c * center.x - s * center.y),
             center.y - (s * center.x + c * center.y));
    return Isometry2(c, -s, s, c, b, false);
}

Isometry2 Isometry2::reflection(const Point2& axis_point, double axis_angle) {
    const double c = std::cos(2.0 * axis_angle), s = std::sin(2.0 * axis_angle);
    Point2 b(axis_point.x - (c * axis_point.x + s * axis_point.y),
             axis_point.y - (s * axis_point.x - c * axis_point.y));
    return Isometry2(c, s, s, -c, b, false);
}

Isometry2 Isometry2::from_matrix(double a11, double a12, double a21, double a22,
                                 const Point2& b) {
    return Isometry2(a11, a12, a21, a22, b, true);
}

std::optional<Isometry2> Isometry2::direct_from_pairs(const Point2& p0, const Point2& p1,
                                                      const Point2& q0, const Point2& q1,
                                                      double eps) {
    const Point2 u = p1 - p0, v = q1 - q0;
    const double lu = norm(u), lv = norm(v);
    if (lu <= eps || std::fabs(lu - lv) > eps) return std::nullopt;
    const double angle = std::atan2(v.y, v.x) - std::atan2(u.y, u.x);
    const double c = std::cos(angle), s = std::sin(angle);
    Point2 b(q0.x - (c * p0.x - s * p0.y), q0.y - (s * p0.x + c * p0.y));
    return Isometry2(c, -s, s, c, b, false);
}

std::optional<Isometry2> Isometry2::indirect_from_pairs(const Point2& p0, const Point2& p1,
                                                        const Point2& q0, const Point2& q1,
                                                        double eps) {
    const Point2 u = p1 - p0, v = q1 - q0;
    const double lu = norm(u), lv = norm(v);
    if (lu <= eps || std::fabs(lu - lv) > eps) return std::nullopt;
    const double two_theta = std::atan2(v.y, v.x) + std::atan2(u.y, u.x);
    const double c = std::cos(two_theta), s = std::sin(two_theta);
    Point2 b(q0.x - (c * p0.x + s * p0.y), q0.y - (s * p0.x - c * p0.y));
    return Isometry2(c, s, s, -c, b, false);
}

Point2 Isometry2::apply(const Point2& p) const {
    return Point2(a11_ * p.x + a12_ * p.y + b_.x, a21_ * p.x + a22_ * p.y + b_.y);
}

Point2 Isometry2::apply_linear(const Point2& v) const {
    return Point2(a11_ * v.x + a12_ * v.y, a21_ * v.x + a22_ * v.y);
}

Isometry2 Isometry2::compose(const Isometry2& g) const {
    // (f.g)(x) = A_f (A_g x + b_g) + b_f
    return Isometry2(a11_ * g.a11_ + a12_ * g.a21_, a11_ * g.a12_ + a12_ * g.a22_,
                     a21_ * g.a11_ + a22_ * g.a21_, a21_ * g.a12_ + a22_ * g.a22_,
                     apply(g.b_), false);
}

Isometry2 Isometry2::inverse() const {
    // A orthogonal: inverse of A is its transpose
    Point2 bi(-(a11_ * b_.x + a21_ * b_.y), -(a12_ * b_.x + a22_ * b_.y));
    return Isometry2(a11_, a21_, a12_, a22_, bi, false);
}

double Isometry2::rotation_angle() const {
    return normalize_angle(std::atan2(a21_, a11_));
}

double Isometry2::reflection_axis_angle() const {
    return normalize_axis_angle(0.5 * std::atan2(a21_, a11_));
}

bool Isometry2::is_identity(double eps) const {
    return std::fabs(a11_ - 1) <= eps && std::fabs(a22_ - 1) <= eps &&
           std::fabs(a12_) <= eps && std::fabs(a21_) <= eps &&
           std::fabs(b_.x) <= eps && std::fabs(b_.y) <= eps;
}

SymmetryGroup::SymmetryGroup(GroupKind kind, int m, const Point2& center,
                             std::optional<double> axis_base_angle)
    : kind_(kind), m_(m), center_(center), axis_base_angle_(axis_base_angle) {}

SymmetryGroup SymmetryGroup::cyclic(int m, const Point2& center) {
    if (m < 1) throw std::invalid_argument("SymmetryGroup: m must be positive");
    return SymmetryGroup(GroupKind::Cyclic, m, center, std::nullopt);
}

SymmetryGroup SymmetryGroup::dihedral(int m, const Point2& center, double axis_base_angle) {
    if (m < 1) throw std::invalid_argument("SymmetryGroup: m must be positive");
    return SymmetryGroup(GroupKind::Dihedral, m, center,
                         normalize_axis_angle(axis_base_angle));
}

SymmetryGroup SymmetryGroup::full_circle(const Point2& center) {
    return SymmetryGroup(GroupKind::FullCircle, 1, center, std::nullopt);
}

std::vector<double> SymmetryGroup::axis_angles() const {
    std::vector<double> out;
    if (kind_ != GroupKind::Dihedral) return out;
    const double base = *axis_base_angle_;
    out.reserve(m_);
    for (int j = 0; j < m_; ++j)
        out.push_back(normalize_axis_angle(base + j * kPi / m_));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SymmetryGroup::order() const {
    if (kind_ == GroupKind::FullCircle)
        throw std::domain_error("infinite group not enumerable");
    return kind_ == GroupKind::Dihedral ? 2u * m_ : static_cast<std::size_t>(m_);
}

std::vector<Isometry2> SymmetryGroup::elements() const {
    if (kind_ == GroupKind::FullCircle)
        throw std::domain_error("infinite group not enumerable");
    std::vector<Isometry2> out;
    out.reserve(order());
    for (int j = 0; j < m_; ++j)
        out.push_back(Isometry2::rotation(center_, kTwoPi * j / m_));
    if (kind_ == GroupKind::Dihedral)
        for (int j = 0; j < m_; ++j)
            out.push_back(Isometry2::reflection(center_, *axis_base_angle_ + j * kPi / m_));
    return out;
}

std::string SymmetryGroup::name() const {
    switch (kind_) {
        case GroupKind::Cyclic:   return "C" + std::to_string(m_);
        case GroupKind::Dihedral: return "D" + std::to_string(m_);
        case GroupKind::FullCircle: return "O2";
    }
    return "?";
}

namespace {

// Distance from p to the line through q with direction angle theta.
double point_line_distance(const Point2& p, const Point2& q, double theta) {
    const Point2 dir(std::cos(theta), std::sin(theta));
    return std::fabs(cross(dir, p - q));
}

}  // namespace

bool SymmetryGroup::equals(const SymmetryGroup& other, double eps_geom,
                           double eps_ang) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == GroupKind::FullCircle)
        return distance(center_, other.center_) <= eps_geom;
    if (m_ != other.m_) return false;
    if (kind_ == GroupKind::Cyclic) {
        // C1 is the trivial group regardless of the stored center.
        return m_ == 1 || distance(center_, other.center_) <= eps_geom;
    }
    if (angle_distance(*axis_base_angle_, *other.axis_base_angle_, kPi / m_) > eps_ang)
        return false;
    if (m_ == 1) {
        // D1: the group is a single axis line; centers may differ along it.
        return point_line_distance(other.center_, center_, *axis_base_angle_) <= eps_geom;
    }
    return distance(center_, other.center_) <= eps_geom;
}

bool SymmetryGroup::is_subgroup_of(const SymmetryGroup& super, double eps_geom,
                                   double eps_ang) const {
    const bool centers_match = distance(center_, super.center_) <= eps_geom;
    if (super.kind_ == GroupKind::FullCircle) {
        if (kind_ == GroupKind::FullCircle) return centers_match;
        if (m_ == 1 && kind_ == GroupKind::Cyclic) return true;
        if (kind_ == GroupKind::Dihedral)
            return m_ == 1
                       ? point_line_distance(super.center_, center_, *axis_base_angle_) <= eps_geom
                       : centers_match;
        return centers_match;
    }
    if (kind_ == GroupKind::FullCircle) return false;
    if (super.m_ % m_ != 0) return false;
    if (kind_ == GroupKind::Cyclic)
        return m_ == 1 || centers_match;
    if (super.kind_ != GroupKind::Dihedral) return false;
    // Every axis of *this must be an axis of super: base angles congruent
    // modulo the coarser grid pi/super.m.
    if (angle_distance(*axis_base_angle_, *super.axis_base_angle_, kPi / super.m_) > eps_ang)
        return false;
    if (m_ == 1)
        return point_line_distance(super.center_, center_, *axis_base_angle_) <= eps_geom;
    return centers_match;
}

SymmetryGroup conjugate(const SymmetryGroup& g, const Isometry2& phi) {
    const Point2 c = phi.apply(g.center());
    switch (g.kind()) {
        case GroupKind::FullCircle:
            return SymmetryGroup::full_circle(c);
        case GroupKind::Cyclic:
            return SymmetryGroup::cyclic(g.m(), c);
        case GroupKind::Dihedral: {
            const double base = *g.axis_base_angle();
            const double mapped = phi.direct()
                                      ? base + phi.rotation_angle()
                                      : 2.0 * phi.reflection_axis_angle() - base;
            return SymmetryGroup::dihedral(g.m(), c, normalize_axis_angle(mapped));
        }
    }
    throw std::logic_error("conjugate: unreachable");
}

SymmetryGroup largest_surviving_subgroup(const SymmetryGroup& g,
                                         const std::vector<char>& rot_keep,
                                         const std::vector<char>& refl_keep) {
    if (g.kind() == GroupKind::FullCircle)
        throw std::domain_error("infinite group not enumerable");
    const int m = g.m();
    if (static_cast<int>(rot_keep.size()) != m)
        throw std::invalid_argument("largest_surviving_subgroup: rot_keep size");

    int q = 1;
    for (int cand = m; cand >= 1; --cand) {
        if (m % cand != 0) continue;
        const int step = m / cand;
        bool all = true;
        for (int j = 0; j < cand && all; ++j) all = rot_keep[j * step];
        if (all) { q = cand; break; }
    }

    if (g.kind() == GroupKind::Dihedral && static_cast<int>(refl_keep.size()) == m) {
        const int step = m / q;
        for (int j0 = 0; j0 < step; ++j0) {
            bool all = true;
            for (int i = 0; i < q && all; ++i) all = refl_keep[j0 + i * step];
            if (all)
                return SymmetryGroup::dihedral(q, g.center(),
                                               *g.axis_base_angle() + j0 * kPi / m);
        }
    }
    return SymmetryGroup::cyclic(q, g.center());
}

}  // namespace symcurve
