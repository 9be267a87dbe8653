#include "symcurve/trig_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symcurve {

namespace {

double harmonic_norm(const Harmonic& h) { return std::max(norm(h.a), norm(h.b)); }

double max_scale(const std::vector<Harmonic>& hs) {
    double s = 0.0;
    for (const auto& h : hs) s = std::max(s, harmonic_norm(h));
    return s;
}

}  // namespace

TrigCurve::TrigCurve(const Point2& a0, std::vector<Harmonic> harmonics, double trim_eps)
    : a0_(a0), harmonics_(std::move(harmonics)) {
    scale_ = max_scale(harmonics_);
    const double cut = trim_eps * scale_;
    while (!harmonics_.empty() && harmonic_norm(harmonics_.back()) <= cut)
        harmonics_.pop_back();
    if (harmonics_.empty())
        throw std::domain_error("degenerate trigonometric curve: single point");
    scale_ = max_scale(harmonics_);
}

const Harmonic& TrigCurve::harmonic(int k) const {
    if (k < 1 || k > degree())
        throw std::out_of_range("TrigCurve::harmonic: k out of range");
    return harmonics_[k - 1];
}

Harmonic TrigCurve::harmonic_or_zero(int k) const {
    if (k < 1 || k > degree()) return Harmonic{};
    return harmonics_[k - 1];
}

Point2 TrigCurve::evaluate(double t) const {
    double x = a0_.x, y = a0_.y;
    for (int k = 1; k <= degree(); ++k) {
        const double c = std::cos(k * t), s = std::sin(k * t);
        const Harmonic& h = harmonics_[k - 1];
        x += h.a.x * c + h.b.x * s;
        y += h.a.y * c + h.b.y * s;
    }
    return Point2(x, y);
}

Point2 TrigCurve::evaluate_harmonic(int k, double t) const {
    const Harmonic h = harmonic_or_zero(k);
    const double c = std::cos(k * t), s = std::sin(k * t);
    return Point2(h.a.x * c + h.b.x * s, h.a.y * c + h.b.y * s);
}

std::vector<int> TrigCurve::active_frequencies(double tol) const {
    std::vector<int> out;
    const double cut = tol * scale_;
    for (int k = 1; k <= degree(); ++k)
        if (harmonic_norm(harmonics_[k - 1]) > cut) out.push_back(k);
    return out;
}

HarmonicClass classify_harmonic(const Point2& a, const Point2& b, double tol,
                                double scale) {
    const double na = norm(a), nb = norm(b);
    if (scale <= 0.0) scale = std::max(na, nb);
    HarmonicClass out;
    if (na <= tol * scale && nb <= tol * scale) {
        out.kind = HarmonicKind::Zero;
        return out;
    }
    const bool equal_len = std::fabs(na - nb) <= tol * scale;
    const bool perpendicular = std::fabs(dot(a, b)) <= tol * scale * scale;
    if (equal_len && perpendicular) {
        out.kind = HarmonicKind::Circle;
        out.lambda = na;
        out.psi = normalize_angle(std::atan2(a.y, a.x));
        out.sigma = cross(a, b) >= 0 ? +1 : -1;
        return out;
    }
    out.kind = HarmonicKind::GenericEllipse;
    return out;
}

std::vector<CycloidTerm> to_cycloid_form(const TrigCurve& c, double tol) {
    std::vector<CycloidTerm> out;
    const double scale = c.coefficient_scale();
    for (int k = 1; k <= c.degree(); ++k) {
        const Harmonic& h = c.harmonic(k);
        const HarmonicClass cl = classify_harmonic(h.a, h.b, tol, scale);
        if (cl.kind == HarmonicKind::Zero) continue;
        if (cl.kind == HarmonicKind::GenericEllipse)
            throw std::domain_error("not a higher cycloid");
        out.push_back(CycloidTerm{k, cl.lambda, cl.psi, cl.sigma});
    }
    return out;
}

TrigCurve make_primitive(const TrigCurve& c, double tol) {
    const std::vector<int> active = c.active_frequencies(tol);
    if (active.empty()) return c;
    int g = 0;
    for (int k : active) g = std::gcd(g, k);
    if (g <= 1) return c;
    std::vector<Harmonic> hs(c.degree() / g);
    for (int k : active) hs[k / g - 1] = c.harmonic(k);
    return TrigCurve(c.a0(), std::move(hs), tol);
}

TrigCurve apply_isometry(const Isometry2& iso, const TrigCurve& c) {
    std::vector<Harmonic> hs;
    hs.reserve(c.degree());
    for (const Harmonic& h : c.harmonics())
        hs.push_back(Harmonic{iso.apply_linear(h.a), iso.apply_linear(h.b)});
    return TrigCurve(iso.apply(c.a0()), std::move(hs), 0.0);
}

TrigCurve reparameterize(const TrigCurve& c, int alpha, double beta) {
    if (alpha != 1 && alpha != -1)
        throw std::invalid_argument("reparameterize: alpha must be +1 or -1");
    std::vector<Harmonic> hs;
    hs.reserve(c.degree());
    for (int k = 1; k <= c.degree(); ++k) {
        const Harmonic& h = c.harmonic(k);
        const double cb = std::cos(k * beta), sb = std::sin(k * beta);
        // cos(k(alpha t + beta)) = cos(kb) cos(kt) - alpha sin(kb) sin(kt)
        // sin(k(alpha t + beta)) = sin(kb) cos(kt) + alpha cos(kb) sin(kt)
        Harmonic r;
        r.a = cb * h.a + sb * h.b;
        r.b = alpha * (cb * h.b - sb * h.a);
        hs.push_back(r);
    }
    return TrigCurve(c.a0(), std::move(hs), 0.0);
}

bool curves_equal(const TrigCurve& c1, const TrigCurve& c2, double tol) {
    double scale = std::max(c1.coefficient_scale(), c2.coefficient_scale());
    scale = std::max({scale, norm(c1.a0()), norm(c2.a0())});
    const double cut = tol * scale;
    if (distance(c1.a0(), c2.a0()) > cut) return false;
    const int n = std::max(c1.degree(), c2.degree());
    for (int k = 1; k <= n; ++k) {
        const Harmonic h1 = c1.harmonic_or_zero(k), h2 = c2.harmonic_or_zero(k);
        if (distance(h1.a, h2.a) > cut || distance(h1.b, h2.b) > cut) return false;
    }
    return true;
}

TrigCurve filter(const TrigCurve& c, int ell) {
    if (ell < 0) throw std::invalid_argument("filter: ell must be nonnegative");
    if (ell >= c.degree()) throw std::domain_error("filtering would erase curve");
    std::vector<Harmonic> hs(c.harmonics().begin(), c.harmonics().end() - ell);
    return TrigCurve(c.a0(), std::move(hs), 0.0);
}

}  // namespace symcurve
