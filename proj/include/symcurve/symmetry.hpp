#ifndef SYMCURVE_SYMMETRY_HPP
#define SYMCURVE_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcurve/tolerances.hpp"
#include "symcurve/trig_curve.hpp"

namespace symcurve {

/// Value set of an (m,d)-sequence at one frequency: a subset of {-1,+1}.
struct SignSet {
    bool minus = false;
    bool plus = false;

    bool empty() const { return !minus && !plus; }
    bool contains(int sigma) const { return sigma < 0 ? minus : plus; }
    bool operator==(const SignSet&) const = default;
};

/// theta^{m,d}(k): {+1} iff m | kd-1, {-1} iff m | -kd-1 (exact integers).
SignSet theta_value(long m, long d, long k);

/// Signed spectrum sigma_p of a higher cycloid: one (k, sigma_k) per
/// active frequency, ascending in k.
using SigmaSequence = std::vector<std::pair<int, int>>;

SigmaSequence sigma_sequence(const std::vector<CycloidTerm>& terms);

struct MaximalMd {
    bool full_circle = false;  // exactly one active signed frequency
    int m = 1;
    int d = 1;
};

/// The maximal (m,d) with sigma <= theta^{m,d}; requires a primitive
/// spectrum.  Throws on an empty spectrum.
MaximalMd maximal_md(const SigmaSequence& sigma);

/// True iff every even-k harmonic vanishes (central symmetry of the
/// centered curve).
bool detect_central(const TrigCurve& c, double tol = 1e-9);

/// Rytz vertex parameter of a genuine ellipse harmonic, in [0, pi/(2k)).
/// Throws std::domain_error for circle input.
double rytz_vertex_parameter(const Point2& a_k, const Point2& b_k, int k,
                             double tol = 1e-9);

/// The 4k vertex parameters {t0 + j*pi/(2k) mod 2*pi}, sorted.
std::vector<double> ellipse_vertex_grid(double t_k0, int k);

/// Candidate syzygy parameters t0, reduced mod pi (t0 and t0 + pi name the
/// same axis), intersected over all circle pairs (first term, i-th term).
/// Throws std::domain_error with fewer than two circle terms.
std::vector<double> syzygy_candidates(const std::vector<CycloidTerm>& terms,
                                      double eps_t = 1e-7);

/// Reflection witness across the line through a0 with direction
/// p(t0) - a0, verified by the coefficient identity; empty on failure.
std::optional<Isometry2> verify_reflection(const TrigCurve& c, double t0,
                                           double tol = 1e-9);

/// Rotation witness by 2*pi/m about a0, verified via the shift 2*pi*d/m.
std::optional<Isometry2> verify_rotation(const TrigCurve& c, int m, int d,
                                         double tol = 1e-9);

struct CurveDetection {
    SymmetryGroup group = SymmetryGroup::cyclic(1, Point2(0, 0));
    std::vector<Isometry2> witnesses;           // rotation generator + axes
    std::vector<double> syzygy_parameters;      // verified t0, in [0, pi)
    int rejected_candidates = 0;
    std::vector<std::string> notes;
};

/// Full decision tree: center at a0, make primitive, split on circle vs
/// ellipse harmonics, verify every candidate.
CurveDetection detect_symmetry_group(const TrigCurve& c,
                                     const Tolerances& tol = Tolerances{});

}  // namespace symcurve

#endif
