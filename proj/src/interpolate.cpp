#include "symcurve/interpolate.hpp"

#include <cmath>

namespace symcurve {

TrigCurve trig_interpolate(const std::vector<Point2>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::domain_error("too few points");
    const bool odd = (n % 2) != 0;
    const int N = odd ? (n - 1) / 2 : n / 2;

    Point2 a0(0, 0);
    for (const Point2& p : points) a0 += p;
    a0 *= 1.0 / n;

    std::vector<Harmonic> hs(N);
    for (int k = 1; k <= N; ++k) {
        Point2 ak(0, 0), bk(0, 0);
        for (int j = 0; j < n; ++j) {
            const double tj = kTwoPi * j / n;
            const double c = std::cos(k * tj), s = std::sin(k * tj);
            ak += c * points[j];
            bk += s * points[j];
        }
        const bool nyquist = !odd && k == N;
        const double w = nyquist ? 1.0 / n : 2.0 / n;
        hs[k - 1].a = w * ak;
        hs[k - 1].b = nyquist ? Point2(0, 0) : w * bk;
    }
    return TrigCurve(a0, std::move(hs));
}

}  // namespace symcurve
