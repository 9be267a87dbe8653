#include "symcurve/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symcurve {

namespace {

bool divides(long m, long value) { return ((value % m) + m) % m == 0; }

// Extended Euclid; returns x with a*x == gcd(a, m) (mod m).
long mod_inverse(long a, long m) {
    long t = 0, new_t = 1;
    long r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        const long q = r / new_r;
        std::tie(t, new_t) = std::pair<long, long>(new_t, t - q * new_t);
        std::tie(r, new_r) = std::pair<long, long>(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t % m) + m) % m;
}

// Match x against sorted values modulo `period` within eps.
bool matches_mod(const std::vector<double>& sorted, double x, double period, double eps) {
    for (double v : sorted)
        if (angle_distance(v, x, period) <= eps) return true;
    return false;
}

void insert_mod(std::vector<double>& values, double x, double period, double eps) {
    if (!matches_mod(values, x, period, eps)) values.push_back(x);
}

}  // namespace

SignSet theta_value(long m, long d, long k) {
    if (m < 1 || k < 1) throw std::invalid_argument("theta_value: m, k must be >= 1");
    SignSet s;
    s.plus = divides(m, k * d - 1);
    s.minus = divides(m, -k * d - 1);
    return s;
}

SigmaSequence sigma_sequence(const std::vector<CycloidTerm>& terms) {
    SigmaSequence s;
    s.reserve(terms.size());
    for (const CycloidTerm& t : terms) s.emplace_back(t.k, t.sigma);
    std::sort(s.begin(), s.end());
    return s;
}

MaximalMd maximal_md(const SigmaSequence& sigma) {
    if (sigma.empty()) throw std::domain_error("maximal_md: empty spectrum");
    if (sigma.size() == 1) return MaximalMd{true, 1, 1};

    // Lemma 6 condition sigma_k * k * d == 1 (mod m) forces m to divide
    // every difference of the signed frequencies s_i = sigma_i * k_i, and
    // s_1 to be a unit mod m.  The maximal m is the gcd of the differences
    // with every prime factor shared with s_1 removed.
    std::vector<long> s;
    for (const auto& [k, sgn] : sigma) s.push_back(static_cast<long>(sgn) * k);
    long g = 0;
    for (std::size_t i = 1; i < s.size(); ++i) g = std::gcd(g, std::labs(s[i] - s[0]));
    long m = g;
    const long a = std::labs(s[0]);
    for (long c = std::gcd(m, a); c > 1; c = std::gcd(m, a)) m /= c;
    if (m <= 1) return MaximalMd{false, 1, 1};

    long d = mod_inverse(s[0], m);
    if (d == 0) d = m;
    return MaximalMd{false, static_cast<int>(m), static_cast<int>(d)};
}

bool detect_central(const TrigCurve& c, double tol) {
    const double cut = tol * c.coefficient_scale();
    for (int k = 2; k <= c.degree(); k += 2) {
        const Harmonic& h = c.harmonic(k);
        if (std::max(norm(h.a), norm(h.b)) > cut) return false;
    }
    return true;
}

double rytz_vertex_parameter(const Point2& a_k, const Point2& b_k, int k, double tol) {
    if (k < 1) throw std::invalid_argument("rytz_vertex_parameter: k must be >= 1");
    const HarmonicClass cl = classify_harmonic(a_k, b_k, tol);
    if (cl.kind != HarmonicKind::GenericEllipse)
        throw std::domain_error("vertex parameter undefined for circle");
    const double u = dot(a_k, a_k) - dot(b_k, b_k);
    const double v = 2.0 * dot(a_k, b_k);
    // arccot branch is irrelevant modulo the pi/(2k) vertex grid.
    double t = 0.5 * std::atan2(v, u) / k;
    const double cell = kPi / (2 * k);
    t = std::fmod(t, cell);
    if (t < 0) t += cell;
    if (t >= cell) t = 0.0;
    return t;
}

std::vector<double> ellipse_vertex_grid(double t_k0, int k) {
    std::vector<double> out;
    out.reserve(4 * k);
    for (int j = 0; j < 4 * k; ++j)
        out.push_back(normalize_angle(t_k0 + j * kPi / (2 * k)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> syzygy_candidates(const std::vector<CycloidTerm>& terms, double eps_t) {
    if (terms.size() < 2)
        throw std::domain_error("syzygy candidates need at least two circle terms");

    const long s0 = static_cast<long>(terms[0].sigma) * terms[0].k;
    std::vector<double> result;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const long si = static_cast<long>(terms[i].sigma) * terms[i].k;
        const long delta = s0 - si;
        const double base = (terms[i].psi - terms[0].psi) / static_cast<double>(delta);
        std::vector<double> pair_set;
        for (long j = 0; j < std::labs(delta); ++j) {
            double t0 = base + j * kPi / static_cast<double>(delta);
            t0 = std::fmod(t0, kPi);
            if (t0 < 0) t0 += kPi;
            insert_mod(pair_set, t0, kPi, eps_t);
        }
        std::sort(pair_set.begin(), pair_set.end());
        if (i == 1) {
            result = std::move(pair_set);
        } else {
            std::vector<double> kept;
            for (double t0 : result)
                if (matches_mod(pair_set, t0, kPi, eps_t)) kept.push_back(t0);
            result = std::move(kept);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<Isometry2> verify_reflection(const TrigCurve& c, double t0, double tol) {
    const double scale = c.coefficient_scale();
    // At a true syzygy p(t0) - a0 and every p_k(t0) lie on the axis, so the
    // largest of them gives the most stable direction.
    Point2 dir = c.evaluate(t0) - c.a0();
    double best = norm(dir);
    for (int k = 1; k <= c.degree(); ++k) {
        const Point2 pk = c.evaluate_harmonic(k, t0);
        const double npk = norm(pk);
        if (npk > best) { best = npk; dir = pk; }
    }
    if (best <= tol * scale) return std::nullopt;  // degenerate direction

    const double axis = normalize_axis_angle(std::atan2(dir.y, dir.x));
    const Isometry2 omega = Isometry2::reflection(c.a0(), axis);
    const TrigCurve lhs = apply_isometry(omega, reparameterize(c, 1, t0));
    const TrigCurve rhs = reparameterize(c, -1, t0);
    if (!curves_equal(lhs, rhs, tol)) return std::nullopt;
    return omega;
}

std::optional<Isometry2> verify_rotation(const TrigCurve& c, int m, int d, double tol) {
    if (m < 2) throw std::invalid_argument("verify_rotation: m must be >= 2");
    const Isometry2 rho = Isometry2::rotation(c.a0(), kTwoPi / m);
    const TrigCurve lhs = apply_isometry(rho, c);
    const TrigCurve rhs = reparameterize(c, 1, kTwoPi * d / m);
    if (!curves_equal(lhs, rhs, tol)) return std::nullopt;
    return rho;
}

CurveDetection detect_symmetry_group(const TrigCurve& c, const Tolerances& tol) {
    CurveDetection out;
    const Point2 center = c.a0();
    const TrigCurve w = make_primitive(c, tol.coef);
    const double scale = w.coefficient_scale();

    std::vector<int> ellipse_ks;
    std::vector<CycloidTerm> circle_terms;
    for (int k = 1; k <= w.degree(); ++k) {
        const Harmonic& h = w.harmonic(k);
        const HarmonicClass cl = classify_harmonic(h.a, h.b, tol.coef, scale);
        if (cl.kind == HarmonicKind::Zero) continue;
        if (cl.kind == HarmonicKind::GenericEllipse)
            ellipse_ks.push_back(k);
        else
            circle_terms.push_back(CycloidTerm{k, cl.lambda, cl.psi, cl.sigma});
    }

    if (ellipse_ks.empty() && circle_terms.empty())
        throw std::domain_error("point, symmetry group is O(2) about a0 - not a curve");

    if (ellipse_ks.empty() && circle_terms.size() == 1) {
        out.group = SymmetryGroup::full_circle(center);
        out.notes.push_back("curve is a circle");
        return out;
    }

    int m = 1, d = 1;
    if (ellipse_ks.empty()) {
        const MaximalMd md = maximal_md(sigma_sequence(circle_terms));
        m = md.m;
        d = md.d;
    } else if (detect_central(w, tol.coef)) {
        m = 2;
        d = 1;
    }

    std::optional<Isometry2> rot;
    if (m >= 2) {
        rot = verify_rotation(w, m, d, tol.coef);
        if (!rot) {
            out.notes.push_back("rotation candidate (m=" + std::to_string(m) +
                                ") failed coefficient verification");
            m = 1;
        }
    }

    // Axis candidates, as parameters t0 reduced mod pi.
    std::vector<double> candidates;
    if (!ellipse_ks.empty()) {
        bool first = true;
        for (int k : ellipse_ks) {
            const Harmonic& h = w.harmonic(k);
            const double tk0 = rytz_vertex_parameter(h.a, h.b, k, tol.coef);
            std::vector<double> grid;
            for (double t : ellipse_vertex_grid(tk0, k))
                insert_mod(grid, std::fmod(t, kPi), kPi, tol.angular);
            std::sort(grid.begin(), grid.end());
            if (first) {
                candidates = std::move(grid);
                first = false;
            } else {
                std::vector<double> kept;
                for (double t0 : candidates)
                    if (matches_mod(grid, t0, kPi, tol.angular)) kept.push_back(t0);
                candidates = std::move(kept);
            }
        }
    } else {
        candidates = syzygy_candidates(circle_terms, tol.angular);
    }

    std::vector<double> axes;
    for (double t0 : candidates) {
        const auto refl = verify_reflection(w, t0, tol.coef);
        if (!refl) {
            ++out.rejected_candidates;
            continue;
        }
        const double axis = refl->reflection_axis_angle();
        if (!matches_mod(axes, axis, kPi, tol.angular)) {
            axes.push_back(axis);
            out.syzygy_parameters.push_back(t0);
        }
    }
    std::sort(axes.begin(), axes.end());
    std::sort(out.syzygy_parameters.begin(), out.syzygy_parameters.end());

    if (axes.empty()) {
        out.group = SymmetryGroup::cyclic(m, center);
        if (rot) out.witnesses.push_back(*rot);
        return out;
    }

    const double base = axes.front();
    if (static_cast<int>(axes.size()) != m)
        out.notes.push_back("verified axis count " + std::to_string(axes.size()) +
                            " differs from rotation order " + std::to_string(m));
    out.group = SymmetryGroup::dihedral(m, center, base);
    if (rot) out.witnesses.push_back(*rot);
    for (int j = 0; j < m; ++j)
        out.witnesses.push_back(Isometry2::reflection(center, base + j * kPi / m));
    return out;
}

}  // namespace symcurve
