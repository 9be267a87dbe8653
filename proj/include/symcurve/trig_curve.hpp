#ifndef SYMCURVE_TRIG_CURVE_HPP
#define SYMCURVE_TRIG_CURVE_HPP

#include <vector>

#include "symcurve/geometry.hpp"

namespace symcurve {

/// Coefficient pair of the k-th harmonic a_k cos(kt) + b_k sin(kt).
struct Harmonic {
    Point2 a;
    Point2 b;
};

/// A planar curve parameterized by trigonometric polynomials:
///   p(t) = a0 + sum_{k=1..N} [a_k cos(kt) + b_k sin(kt)].
/// Trailing harmonics below eps * coefficient scale are trimmed on
/// construction, so degree() is well defined.
class TrigCurve {
public:
    /// `harmonics[k-1]` is the k-th pair.  Throws if every harmonic
    /// vanishes (the "curve" would be a single point).
    TrigCurve(const Point2& a0, std::vector<Harmonic> harmonics, double trim_eps = 1e-9);

    const Point2& a0() const { return a0_; }
    int degree() const { return static_cast<int>(harmonics_.size()); }
    /// k in [1, degree()].
    const Harmonic& harmonic(int k) const;
    /// Zero pair for k > degree().
    Harmonic harmonic_or_zero(int k) const;
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }

    Point2 evaluate(double t) const;
    /// The k-th component ellipse point a_k cos(kt) + b_k sin(kt).
    Point2 evaluate_harmonic(int k, double t) const;

    /// Max norm over all harmonic coefficients.
    double coefficient_scale() const { return scale_; }

    /// Frequencies whose harmonic is nonzero at relative tolerance tol.
    std::vector<int> active_frequencies(double tol = 1e-9) const;

private:
    Point2 a0_;
    std::vector<Harmonic> harmonics_;
    double scale_;
};

enum class HarmonicKind { Zero, Circle, GenericEllipse };

/// Classification of one harmonic; lambda/psi/sigma are meaningful for
/// Circle only (p_k = lambda e^{(sigma k t + psi) i}).
struct HarmonicClass {
    HarmonicKind kind = HarmonicKind::Zero;
    double lambda = 0.0;
    double psi = 0.0;
    int sigma = 0;
};

/// Classify relative to `scale` (defaults to max(|a|,|b|) when <= 0).
HarmonicClass classify_harmonic(const Point2& a, const Point2& b, double tol,
                                double scale = -1.0);

/// One circle term of a higher cycloid.
struct CycloidTerm {
    int k = 0;
    double lambda = 0.0;
    double psi = 0.0;
    int sigma = 0;
};

/// Complex circle decomposition; throws std::domain_error("not a higher
/// cycloid") when some harmonic is a genuine ellipse.
std::vector<CycloidTerm> to_cycloid_form(const TrigCurve& c, double tol = 1e-9);

/// Reindex frequencies by their gcd so the result is primitive.
TrigCurve make_primitive(const TrigCurve& c, double tol = 1e-9);

/// Coefficient-level image: a0 -> A a0 + b, a_k -> A a_k, b_k -> A b_k.
TrigCurve apply_isometry(const Isometry2& iso, const TrigCurve& c);

/// Closed-form coefficients of t -> c(alpha t + beta), alpha in {-1,+1}.
TrigCurve reparameterize(const TrigCurve& c, int alpha, double beta);

/// Coefficientwise equality within tol * max coefficient scale.
bool curves_equal(const TrigCurve& c1, const TrigCurve& c2, double tol);

/// Drop the top `ell` harmonics; throws std::domain_error when ell >= N.
TrigCurve filter(const TrigCurve& c, int ell);

}  // namespace symcurve

#endif
