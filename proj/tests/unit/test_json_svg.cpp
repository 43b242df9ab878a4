#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gyro/campaign.hpp"
#include "gyro/report_json.hpp"
#include "gyro/svg.hpp"

using namespace gyro;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(GYRO_TEST_DATA) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("point and gyroline JSON round-trip") {
    const DiscPoint p(0.25, -0.5);
    CHECK(to_json(p).dump() == "[0.25,-0.5]");
    CHECK(point_from_json(to_json(p)) == p);

    const Gyroline d = Gyroline::diameter(0.5);
    const auto jd = to_json(d);
    CHECK(jd["kind"] == "diameter");
    CHECK(jd["theta"] == 0.5);
    CHECK(gyroline_from_json(jd).approx_equal(d));

    const Gyroline a = gyroline_through(DiscPoint(0.5, 0.0), DiscPoint(0.0, 0.5));
    const auto ja = to_json(a);
    CHECK(ja["kind"] == "arc");
    CHECK(ja.contains("cx"));
    CHECK(ja.contains("cy"));
    CHECK(ja.contains("r"));
    CHECK(gyroline_from_json(ja).approx_equal(a));
    CHECK_THROWS(gyroline_from_json(nlohmann::json{{"kind", "ellipse"}}));
}

TEST_CASE("report JSON schema") {
    const QuadConfig cfg{DiscPoint(0.4, 0.0), DiscPoint(0.0, 0.3), DiscPoint(-0.45, 0.0), DiscPoint(-0.2, -0.3)};
    const MenelausReport report = quad_menelaus(cfg, gyroline_through(DiscPoint(0.05, 0.1), DiscPoint(0.1, 0.3)));
    const auto j = to_json(report);
    CHECK(j["theorem"] == "T3");
    REQUIRE(j["ratios"].size() == 4);
    CHECK(j["ratios"][0]["label"] == "AX/BX");
    for (const char* key : {"numerator", "denominator", "numerator_v", "denominator_v", "ratio"})
        CHECK(j["ratios"][0].contains(key));
    CHECK(j["product"].is_number());
    CHECK(j["deviation"].get<double>() <= 1e-9);
    REQUIRE(j["intersections"].size() == 4);
    CHECK(j["intersections"][1]["label"] == "Y");
    CHECK(j["intersections"][1]["side"] == "BC");
    CHECK(j["intersections"][1]["point"].size() == 2);
    CHECK(j.contains("decomposition") == report.decomposition.has_value());
    const QuadCase c = gen_quad_transversal(GenPolicy{1});
    REQUIRE(c.diagonal_meets);
    const auto jt = to_json(quad_menelaus(c.config, c.line()));
    CHECK(jt["decomposition"]["T"].size() == 2);
    CHECK(jt["decomposition"].contains("abd_product"));
}

TEST_CASE("campaign JSON") {
    GenPolicy policy{9};
    const CampaignReport r = run_campaign(CampaignKind::Quadrilateral, 20, policy, 1e-9, "gyro random t3");
    const auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "gyro random t3");
    CHECK(j["cases"].size() == 20);
    CHECK(j["aggregate"]["count"] == 20);
    CHECK(j["aggregate"]["failures"] == 0);
    double worst = 0.0;
    for (const auto& c : j["cases"]) worst = std::max(worst, c["deviation"].get<double>());
    CHECK(j["aggregate"]["max_deviation"].get<double>() == worst);
    CHECK_FALSE(j.contains("timing"));
    CHECK(to_json(r, true, true)["timing"].contains("elapsed_ms"));
    CHECK(to_json(run_campaign(CampaignKind::Quadrilateral, 20, policy, 1e-9, "gyro random t3")).dump() == j.dump());
}

TEST_CASE("campaign kinds") {
    for (auto kind : {CampaignKind::Triangle, CampaignKind::Quadrilateral, CampaignKind::Transversal,
                      CampaignKind::Converse}) {
        CHECK(campaign_from_string(to_string(kind)) == kind);
        const CampaignReport r = run_campaign(kind, 25, GenPolicy{3}, 1e-9);
        CHECK(r.failures == 0);
        CHECK(r.max_deviation <= 1e-9);
    }
    CHECK_FALSE(campaign_from_string("t9").has_value());
}

TEST_CASE("SVG of the minimal scene") {
    const std::string svg = render_svg(scene::resolve(scene::parse(read_file("minimal.gyro"))));
    CHECK(count(svg, "<circle class=\"boundary\"") == 1);
    CHECK(count(svg, "<path ") == 1);
    CHECK(count(svg, "<g class=\"marker\"") == 2);
    CHECK(count(svg, "<text") == 2);
}

TEST_CASE("SVG of the quadrilateral scene") {
    const auto model = scene::resolve(scene::parse(read_file("quad.gyro")));
    const std::string svg = render_svg(model);
    CHECK(count(svg, "class=\"side\"") == 4);
    CHECK(count(svg, "class=\"transversal\"") == 1);
    CHECK(count(svg, "class=\"intersection\"") == 4);
    CHECK(count(svg, "<g class=\"marker\"") == 6);
    CHECK(render_svg(model) == svg);
}
