#ifndef SYMCURVE_IO_HPP
#define SYMCURVE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "symcurve/trig_curve.hpp"

namespace symcurve {

/// CSV point list: one "x,y" per line, '#' comments and blank lines
/// ignored.  Throws std::runtime_error on malformed input.
std::vector<Point2> read_points_csv(std::istream& in);
std::vector<Point2> read_points_csv_file(const std::string& path);
void write_points_csv(std::ostream& out, const std::vector<Point2>& points);
void write_points_csv_file(const std::string& path, const std::vector<Point2>& points);

/// Curve JSON: {"a0":[x,y], "harmonics":[{"k":int,"a":[x,y],"b":[x,y]},...]};
/// harmonics sorted by k, missing k means zero.
std::string curve_to_json(const TrigCurve& c);
TrigCurve curve_from_json(const std::string& text);
TrigCurve read_curve_json_file(const std::string& path);
void write_curve_json_file(const std::string& path, const TrigCurve& c);

}  // namespace symcurve

#endif
