#include "nestofan/json_io.hpp"
#include "nestofan/svg.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace nestofan;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(NESTOFAN_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    return json::parse(in);
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(NESTOFAN_TEST_DATA) + "/" + name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(FanJson, GoldenHexagon) {
    const BuildingSet b = building_set_from_json(load("complete2.json"));
    EXPECT_EQ(dump(fan_to_json(sym_fan(b, 2))), slurp("hexagon.json"));
}

TEST(FanJson, RoundTrip) {
    const Fan h = sym_fan(complete_building_set(1, 2), 2);
    const Fan back = fan_from_json(json::parse(dump(fan_to_json(h))));
    EXPECT_TRUE(fan_equal(back, h));
    EXPECT_EQ(canonical(back).labels(), canonical(h).labels());
    EXPECT_EQ(dump(fan_to_json(back)), dump(fan_to_json(h)));
}

TEST(FanJson, LargeCoordinatesAsStrings) {
    Integer big = (Integer(1) << 80) + 1;
    Fan f(1, {LatticeVector(std::vector<Integer>{big})}, {Cone{0}});
    json j = fan_to_json(f);
    EXPECT_TRUE(j["rays"][0][0].is_string());
    EXPECT_EQ(fan_from_json(j).ray(0)[0], big);
}

TEST(FanJson, RejectsMalformed) {
    EXPECT_THROW(fan_from_json(json::parse(R"({"rays": [], "max_cones": []})")), InputError);
    EXPECT_THROW(fan_from_json(json::parse(R"({"rank": 1, "rays": [[1]], "max_cones": [[3]]})")), InputError);
    EXPECT_THROW(fan_from_json(json::parse(R"({"rank": 1, "rays": [["x"]], "max_cones": []})")), InputError);
    EXPECT_THROW(fan_from_json(json::parse(R"({"rank": -1, "rays": [], "max_cones": []})")), InputError);
}

TEST(BuildingSetJson, RoundTripPlain) {
    const BuildingSet b = complete_building_set(3, 5);
    EXPECT_EQ(building_set_from_json(building_set_to_json(b)), b);
}

TEST(BuildingSetJson, RoundTripOverPolytope) {
    const BuildingSet s = sym_building_set(complete_building_set(4, 6), 2);
    const BuildingSet back = building_set_from_json(json::parse(dump(building_set_to_json(s))));
    EXPECT_EQ(back, s);
    EXPECT_TRUE(fan_equal(back.base_fan(), s.base_fan()));
    const BuildingSet chamber = b_A(lm_weights(2, 6)).building_set;
    EXPECT_EQ(building_set_from_json(building_set_to_json(chamber)), chamber);
}

TEST(BuildingSetJson, RejectsMalformed) {
    EXPECT_THROW(building_set_from_json(json::parse(R"({"ground": ["1"], "members": [], "mode": "x"})")),
                 InputError);
    EXPECT_THROW(building_set_from_json(json::parse(R"({"ground": ["1"], "members": [["2"]], "mode": "plain"})")),
                 InputError);
    EXPECT_THROW(
        building_set_from_json(json::parse(R"({"ground": ["1:1", "1:2", "2:2"], "members": [], "mode": "over_polytope"})")),
        InputError);
    EXPECT_THROW(
        building_set_from_json(json::parse(R"({"ground": ["1", "2"], "members": [["1", "1"]], "mode": "plain"})")),
        InputError);
}

TEST(WeightJson, RoundTrip) {
    const WeightVector A = lm_weights(2, 6);
    const json j = weight_vector_to_json(A);
    EXPECT_EQ(j["a"][3], "1/3");
    EXPECT_EQ(j["a"][0], "1/1");
    EXPECT_EQ(weight_vector_from_json(json::parse(dump(j))), A);
}

TEST(WeightJson, RejectsBelowFloor) {
    auto j = json::parse(R"({"d": 2, "n": 5, "a": ["1", "1", "1", "1/4", "1/4"]})");
    EXPECT_THROW(weight_vector_from_json(j), InputError);
    EXPECT_THROW(weight_vector_from_json(json::parse(R"({"d": 2, "n": 5, "a": [0.5]})")), InputError);
    EXPECT_THROW(weight_vector_from_json(json::parse(R"({"d": 2, "n": 4, "a": ["1","1","1","1"]})")),
                 InputError);
}

TEST(ReportJson, ReportedPrefix) {
    Report r;
    r.instance = {{"d", 1}};
    r.add("gate", true, "fine");
    r.add("info", false, "a fact", false);
    const json j = report_to_json(r);
    EXPECT_EQ(j["checks"][0]["detail"], "fine");
    EXPECT_EQ(j["checks"][1]["detail"], "reported: a fact");
    EXPECT_EQ(j["checks"][1]["pass"], false);
}

TEST(Svg, Hexagon) {
    const std::string svg = render_svg(sym_fan(complete_building_set(1, 2), 2));
    EXPECT_EQ(count(svg, "class=\"ray\""), 6u);
    EXPECT_EQ(count(svg, "class=\"sector\""), 6u);
    EXPECT_EQ(count(svg, "class=\"vertex\""), 6u);
    EXPECT_NE(svg.find("id=\"dual\""), std::string::npos);
}

TEST(Svg, TriangleAndSquare) {
    const std::string tri = render_svg(simplex_fan(1, 3));
    EXPECT_EQ(count(tri, "class=\"ray\""), 3u);
    EXPECT_EQ(count(tri, "class=\"vertex\""), 3u);
    const std::string sq = render_svg(product(simplex_fan(1, 2), simplex_fan(1, 2)));
    EXPECT_EQ(count(sq, "class=\"ray\""), 4u);
    EXPECT_EQ(count(sq, "class=\"vertex\""), 4u);
}

// Dual vertices of the square fan are the corners (+-1, +-1) of the polygon
// {m : <m, u> >= -1}; they land symmetric about the polygon center.
TEST(Svg, SquareDualIsSymmetric) {
    const std::string sq = render_svg(product(simplex_fan(1, 2), simplex_fan(1, 2)));
    EXPECT_NE(sq.find("cx=\"600.00\" cy=\"40.00\""), std::string::npos);
    EXPECT_NE(sq.find("cx=\"360.00\" cy=\"280.00\""), std::string::npos);
}

TEST(Svg, RejectsOtherRanks) {
    EXPECT_THROW(render_svg(simplex_fan(1, 4)), InputError);
    EXPECT_THROW(render_svg(simplex_fan(1, 2)), InputError);
}
