#include "symcurve/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace symcurve {

std::vector<Point2> read_points_csv(std::istream& in) {
    std::vector<Point2> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::istringstream ls(line);
        double x, y;
        char comma;
        if (!(ls >> x >> comma >> y) || comma != ',')
            throw std::runtime_error("malformed CSV point at line " + std::to_string(lineno));
        out.emplace_back(x, y);
    }
    return out;
}

std::vector<Point2> read_points_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_points_csv(in);
}

void write_points_csv(std::ostream& out, const std::vector<Point2>& points) {
    out << std::setprecision(17);
    for (const Point2& p : points) out << p.x << "," << p.y << "\n";
}

void write_points_csv_file(const std::string& path, const std::vector<Point2>& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_points_csv(out, points);
}

std::string curve_to_json(const TrigCurve& c) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["a0"] = {c.a0().x, c.a0().y};
    ordered_json hs = ordered_json::array();
    for (int k = 1; k <= c.degree(); ++k) {
        const Harmonic& h = c.harmonic(k);
        if (norm(h.a) == 0.0 && norm(h.b) == 0.0) continue;
        hs.push_back({{"k", k}, {"a", {h.a.x, h.a.y}}, {"b", {h.b.x, h.b.y}}});
    }
    j["harmonics"] = hs;
    return j.dump(2);
}

namespace {

Point2 parse_point(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error(std::string("curve JSON: ") + what + " must be [x,y]");
    return Point2(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

TrigCurve curve_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("curve JSON parse error: ") + e.what());
    }
    const Point2 a0 = j.contains("a0") ? parse_point(j.at("a0"), "a0") : Point2(0, 0);
    int max_k = 0;
    for (const auto& h : j.value("harmonics", nlohmann::json::array()))
        max_k = std::max(max_k, h.at("k").get<int>());
    std::vector<Harmonic> hs(max_k);
    for (const auto& h : j.value("harmonics", nlohmann::json::array())) {
        const int k = h.at("k").get<int>();
        if (k < 1) throw std::runtime_error("curve JSON: harmonic index must be >= 1");
        hs[k - 1].a = parse_point(h.at("a"), "a");
        hs[k - 1].b = parse_point(h.at("b"), "b");
    }
    return TrigCurve(a0, std::move(hs));
}

TrigCurve read_curve_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return curve_from_json(ss.str());
}

void write_curve_json_file(const std::string& path, const TrigCurve& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << curve_to_json(c) << "\n";
}

}  // namespace symcurve
