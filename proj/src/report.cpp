#include "symcurve/report.hpp"

#include <json.hpp>

namespace symcurve {

std::string report_to_json(const SymmetryReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["input_kind"] = report.input_kind;
    const SymmetryGroup& g = report.group;
    j["group"] = g.name();
    j["m"] = g.m();
    j["center"] = {g.center().x, g.center().y};
    j["axes"] = g.axis_angles();

    ordered_json witnesses = ordered_json::array();
    for (const Isometry2& w : report.witnesses) {
        ordered_json e;
        if (w.direct()) {
            e["kind"] = w.is_identity(1e-12) ? "identity" : "rotation";
            e["center"] = {g.center().x, g.center().y};
            e["angle"] = w.rotation_angle();
        } else {
            e["kind"] = "reflection";
            e["center"] = {g.center().x, g.center().y};
            e["angle"] = w.reflection_axis_angle();
        }
        witnesses.push_back(e);
    }
    j["witnesses"] = witnesses;

    if (report.interpolant_degree)
        j["interpolant_degree"] = *report.interpolant_degree;
    else
        j["interpolant_degree"] = nullptr;
    j["rejected_candidates"] = report.rejected_candidates;
    j["syzygy_parameters"] = report.syzygy_parameters;
    j["tolerances"] = {{"coef", report.tolerances.coef},
                       {"geom", report.tolerances.geom},
                       {"angular", report.tolerances.angular},
                       {"match", report.tolerances.match},
                       {"hausdorff", report.tolerances.hausdorff}};
    j["notes"] = report.notes;
    return j.dump(2);
}

}  // namespace symcurve
