#ifndef SYMCURVE_INTERPOLATE_HPP
#define SYMCURVE_INTERPOLATE_HPP

#include <vector>

#include "symcurve/trig_curve.hpp"

namespace symcurve {

/// Trigonometric interpolation of ordered points at the uniform nodes
/// t_j = 2*pi*j/n.  For odd n = 2N+1 the interpolant is unique; for even
/// n = 2N the free sin(Nt) term is set to zero (b_N = 0).
/// Throws std::domain_error for n < 3.
TrigCurve trig_interpolate(const std::vector<Point2>& points);

}  // namespace symcurve

#endif
