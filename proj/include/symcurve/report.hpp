#ifndef SYMCURVE_REPORT_HPP
#define SYMCURVE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcurve/geometry.hpp"
#include "symcurve/tolerances.hpp"

namespace symcurve {

/// Detection result for a curve, polyline, or cloud: the group, the
/// witness isometries that were actually verified, and enough context to
/// reproduce the run.
struct SymmetryReport {
    std::string input_kind;  // "trig_curve" | "discrete_curve" | "point_cloud"
    SymmetryGroup group = SymmetryGroup::cyclic(1, Point2(0, 0));
    std::vector<Isometry2> witnesses;
    std::optional<int> interpolant_degree;
    int rejected_candidates = 0;
    std::vector<double> syzygy_parameters;
    Tolerances tolerances;
    std::vector<std::string> notes;
};

/// Serialize to the CLI's JSON schema (deterministic field order).
std::string report_to_json(const SymmetryReport& report);

}  // namespace symcurve

#endif
