#include <gtest/gtest.h>

#include <json.hpp>

#include "arcsys/annulus.hpp"
#include "arcsys/constructions.hpp"
#include "arcsys/io.hpp"
#include "arcsys/svg.hpp"

using namespace arcsys;
using nlohmann::json;

TEST(ClassText, Forms) {
  ArcClass want = alpha_ij(5, 1, 3);
  EXPECT_EQ(parse_class_text(5, "U[2,0,3]"), want);
  EXPECT_EQ(parse_class_text(5, "(U, [2,0,3])"), want);
  EXPECT_EQ(parse_class_text(5, " U [ 2 , 0 , 3 ] "), want);
  EXPECT_EQ(parse_class_text(5, "L[]"), alpha_below(5));
  EXPECT_EQ(parse_class_text(5, "U[2,2,3]"), parse_class_text(5, "U[3]"));
  ArcClass g = parse_class_text(5, "r1->r2 U[]");
  EXPECT_EQ(g.from, Puncture::r(1));
  EXPECT_EQ(g.to, Puncture::r(2));
  for (const char* bad : {"", "X[1]", "U[1", "U[7]", "U[a]", "U[1,]"})
    EXPECT_THROW(parse_class_text(5, bad), std::invalid_argument) << bad;
}

TEST(Json, ClassRoundTrip) {
  for (const auto& c : enumerate_classes(SurfaceSpec(5), 3)) {
    std::string s = class_to_json(c);
    EXPECT_EQ(class_from_json(s), c);
    json j = json::parse(s);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["seq"].get<std::vector<int>>(), c.seq);
  }
  ArcClass g = gamma_arc(6, 2);
  EXPECT_EQ(class_from_json(class_to_json(g)), g);
}

TEST(Json, SystemRoundTrip) {
  ArcSystem sys = max_two_system(6);
  std::string s = system_to_json(sys);
  json j = json::parse(s);
  EXPECT_EQ(j["kind"], "arc-system");
  EXPECT_EQ(j["classes"].size(), 20u);
  EXPECT_EQ(j["matrix"].get<std::vector<std::vector<int>>>(), sys.matrix);
  ArcSystem back = system_from_json(s);
  EXPECT_EQ(back.classes, sys.classes);
  EXPECT_EQ(back.labels, sys.labels);
  EXPECT_EQ(back.matrix, sys.matrix);
  EXPECT_TRUE(std::holds_alternative<ArcSystem>(parse_document(s)));
}

TEST(Json, DiagramRoundTrip) {
  AnnularDiagram d = annulus_diagram({{0, 2, 1}, {0, 1, 0}});
  std::string s = diagram_to_json(d);
  AnnularDiagram back = diagram_from_json(s);
  EXPECT_EQ(back.map.next, d.map.next);
  EXPECT_EQ(back.map.opposite, d.map.opposite);
  EXPECT_EQ(back.map.vertex, d.map.vertex);
  EXPECT_EQ(back.boundary, d.boundary);
  EXPECT_TRUE(std::holds_alternative<AnnularDiagram>(parse_document(s)));
}

TEST(Json, Malformed) {
  EXPECT_THROW(parse_document("{"), std::invalid_argument);
  EXPECT_THROW(parse_document("[1,2]"), std::invalid_argument);
  EXPECT_THROW(class_from_json(R"({"n": 5, "side": "U", "seq": [2, 2]})"), std::invalid_argument);
  EXPECT_THROW(class_from_json(R"({"n": 3, "side": "U", "seq": [2, 1]})"), std::invalid_argument);
  EXPECT_THROW(class_from_json(R"({"n": 5, "side": "Q", "seq": []})"), std::invalid_argument);
  json j = json::parse(system_to_json(max_two_system(5)));
  j["matrix"][0][1] = 7;
  j["matrix"][1][0] = 7;
  EXPECT_THROW(system_from_json(j.dump()), std::invalid_argument);
  json d = json::parse(diagram_to_json(make_cycle(3)));
  d["darts"][0]["opposite"] = 99;
  EXPECT_THROW(diagram_from_json(d.dump()), std::invalid_argument);
}

TEST(Svg, WellFormedOutput) {
  std::string a = render_system_svg(max_two_system(5));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  std::string b = render_diagram_svg(annulus_diagram({{0, 1}, {0, 1}}));
  EXPECT_NE(b.find("</svg>"), std::string::npos);
}
