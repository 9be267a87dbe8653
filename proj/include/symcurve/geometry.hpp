#ifndef SYMCURVE_GEOMETRY_HPP
#define SYMCURVE_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcurve {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Normalize an angle into [0, 2*pi).
double normalize_angle(double a);

/// Normalize a line direction into [0, pi).  A line and its opposite
/// direction are the same axis.
double normalize_axis_angle(double a);

/// Absolute angular distance of a and b taken modulo `period`.
double angle_distance(double a, double b, double period = kTwoPi);

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py))
            throw std::invalid_argument("Point2: coordinates must be finite");
    }

    Point2& operator+=(const Point2& o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(const Point2& o) { x -= o.x; y -= o.y; return *this; }
    Point2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Point2 operator+(Point2 a, const Point2& b) { return a += b; }
inline Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
inline Point2 operator*(double s, Point2 p) { return p *= s; }
inline Point2 operator*(Point2 p, double s) { return p *= s; }
inline Point2 operator-(const Point2& p) { return Point2(-p.x, -p.y); }

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

/// A plane isometry x -> A*x + b with A orthogonal.  Public construction
/// goes through the parameter-based factories so that orthogonality holds
/// by construction; the raw-matrix route checks A^T A = I to 1e-12.
class Isometry2 {
public:
    static Isometry2 identity();
    static Isometry2 translation(const Point2& b);
    static Isometry2 rotation(const Point2& center, double angle);
    static Isometry2 reflection(const Point2& axis_point, double axis_angle);
    static Isometry2 from_matrix(double a11, double a12, double a21, double a22,
                                 const Point2& b);

    /// Unique direct isometry with p0 -> q0, p1 -> q1; empty when the
    /// segment lengths disagree beyond eps.
    static std::optional<Isometry2> direct_from_pairs(const Point2& p0, const Point2& p1,
                                                      const Point2& q0, const Point2& q1,
                                                      double eps);
    /// Same for the unique indirect (orientation-reversing) isometry.
    static std::optional<Isometry2> indirect_from_pairs(const Point2& p0, const Point2& p1,
                                                        const Point2& q0, const Point2& q1,
                                                        double eps);

    Point2 apply(const Point2& p) const;
    /// Apply only the orthogonal part A (for direction vectors).
    Point2 apply_linear(const Point2& v) const;

    Isometry2 compose(const Isometry2& g) const;  // this after g
    Isometry2 inverse() const;

    bool direct() const { return det_ > 0; }
    /// Rotation angle of A in [0, 2*pi); valid for direct isometries.
    double rotation_angle() const;
    /// Axis direction of A in [0, pi); valid for indirect isometries.
    double reflection_axis_angle() const;

    const Point2& translation_part() const { return b_; }
    double a11() const { return a11_; }
    double a12() const { return a12_; }
    double a21() const { return a21_; }
    double a22() const { return a22_; }

    bool is_identity(double eps) const;

private:
    Isometry2(double a11, double a12, double a21, double a22, const Point2& b,
              bool check);

    double a11_, a12_, a21_, a22_;
    Point2 b_;
    double det_;
};

inline Point2 apply(const Isometry2& iso, const Point2& p) { return iso.apply(p); }
inline Isometry2 compose(const Isometry2& f, const Isometry2& g) { return f.compose(g); }
inline Isometry2 invert(const Isometry2& f) { return f.inverse(); }

enum class GroupKind { Cyclic, Dihedral, FullCircle };

/// Descriptor of a finite plane symmetry group (or the full circle group
/// O(2) about a center).
class SymmetryGroup {
public:
    static SymmetryGroup cyclic(int m, const Point2& center);
    static SymmetryGroup dihedral(int m, const Point2& center, double axis_base_angle);
    static SymmetryGroup full_circle(const Point2& center);

    GroupKind kind() const { return kind_; }
    int m() const { return m_; }
    const Point2& center() const { return center_; }
    /// Present iff kind == Dihedral.
    std::optional<double> axis_base_angle() const { return axis_base_angle_; }
    /// All m axis directions of a dihedral group, ascending in [0, pi).
    std::vector<double> axis_angles() const;

    std::size_t order() const;  // throws for FullCircle
    /// Cyclic(m): the m rotations.  Dihedral(m): rotations then reflections.
    std::vector<Isometry2> elements() const;

    /// "C3", "D5", "O2".
    std::string name() const;

    bool equals(const SymmetryGroup& other, double eps_geom = 1e-9,
                double eps_ang = 1e-9) const;
    /// True when every element of *this is an element of `super`.
    bool is_subgroup_of(const SymmetryGroup& super, double eps_geom = 1e-8,
                        double eps_ang = 1e-8) const;

private:
    SymmetryGroup(GroupKind kind, int m, const Point2& center,
                  std::optional<double> axis_base_angle);

    GroupKind kind_;
    int m_;
    Point2 center_;
    std::optional<double> axis_base_angle_;
};

/// The group of phi(X) given the group of X: center and axes mapped by phi.
SymmetryGroup conjugate(const SymmetryGroup& g, const Isometry2& phi);

/// Largest subgroup of `g` (finite) whose elements all survive a filter.
/// `rot_keep[j]` flags the rotation by 2*pi*j/m, `refl_keep[j]` the
/// reflection with axis base + j*pi/m (empty for cyclic groups).
SymmetryGroup largest_surviving_subgroup(const SymmetryGroup& g,
                                         const std::vector<char>& rot_keep,
                                         const std::vector<char>& refl_keep);

}  // namespace symcurve

#endif
