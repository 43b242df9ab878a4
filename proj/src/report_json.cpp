#include "gyro/report_json.hpp"

#include <string>

namespace gyro {

using nlohmann::json;

json to_json(const DiscPoint& p) { return json::array({p.re(), p.im()}); }

DiscPoint point_from_json(const json& j, BallParam ball) {
    if (!j.is_array() || j.size() != 2) throw GyroError(ErrorKind::Domain, "point must be a [re, im] pair");
    return DiscPoint(j.at(0).get<double>(), j.at(1).get<double>(), ball);
}

json to_json(const Gyroline& line) {
    if (const auto* d = line.as_diameter()) return json{{"kind", "diameter"}, {"theta", d->theta}};
    const auto& arc = *line.as_arc();
    return json{{"kind", "arc"}, {"cx", arc.center.real()}, {"cy", arc.center.imag()}, {"r", arc.radius}};
}

Gyroline gyroline_from_json(const json& j, BallParam ball) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "diameter") return Gyroline::diameter(j.at("theta").get<double>(), ball);
    if (kind == "arc") {
        return Gyroline::arc(Complex{j.at("cx").get<double>(), j.at("cy").get<double>()}, j.at("r").get<double>(),
                             ball);
    }
    throw GyroError(ErrorKind::Domain, "unknown gyroline kind '" + kind + "'");
}

json to_json(const MenelausReport& report) {
    json ratios = json::array();
    for (const auto& r : report.ratios) {
        ratios.push_back({{"label", r.label},
                          {"numerator", r.numerator.v_gamma},
                          {"denominator", r.denominator.v_gamma},
                          {"numerator_v", r.numerator.v},
                          {"denominator_v", r.denominator.v},
                          {"ratio", r.ratio}});
    }
    json hits = json::array();
    for (const auto& h : report.intersections) {
        hits.push_back({{"side", h.side}, {"label", h.label}, {"point", to_json(h.point)}, {"interior", h.interior}});
    }
    json out{{"theorem", std::string(theorem_code(report.theorem))},
             {"ratios", std::move(ratios)},
             {"product", report.product},
             {"deviation", report.deviation},
             {"intersections", std::move(hits)}};
    if (report.decomposition) {
        out["decomposition"] = {{"T", to_json(report.decomposition->T)},
                                {"abd_product", report.decomposition->abd_product},
                                {"bcd_product", report.decomposition->bcd_product}};
    }
    return out;
}

}  // namespace gyro
