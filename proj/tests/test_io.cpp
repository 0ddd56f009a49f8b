#include <gtest/gtest.h>

#include "vtcrystal/io.hpp"

using namespace vtc;

namespace {

using IntMat = std::vector<std::vector<int>>;

CrystalGraph module_graph(const CartanDatum& d, std::vector<int> l) {
  return build_crystal(std::make_shared<HWModule>(d, l)).graph();
}

}  // namespace

TEST(Io, DatumParsing) {
  const CartanDatum a2 = datum_from_json(Json::parse(R"({"Lambda": [[1, -1], [0, 1]], "labels": ["a", "b"]})"));
  EXPECT_EQ(a2.cartan(0, 1), -1);
  EXPECT_EQ(a2.labels()[1], "b");
  EXPECT_EQ(a2.D(), 3);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"Lambda": [[1.5]]})")), ValidationError);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"Lambda": [[1, 1], [0, 1]]})")), ValidationError);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"labels": ["1"]})")), ValidationError);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"Lambda": [[1]], "extra": 1})")), ValidationError);
  EXPECT_THROW(datum_from_json(Json::parse(R"({"Lambda": [[1, -1], [0, 1]], "labels": ["a", "a"]})")),
               ValidationError);
}

TEST(Io, Pairings) {
  // Singular Cartan matrix: pairings are required.
  const auto affine = Json::parse(R"({"Lambda": [[1, -1], [-1, 1]]})");
  EXPECT_THROW(datum_from_json(affine), ValidationError);
  Json j = affine;
  j["pairings"] = Json::parse(R"({"denominator": 1, "left": [[1, 0], [0, 1]], "right": [[0, 0], [0, 0]]})");
  const CartanDatum d = datum_from_json(j);
  EXPECT_EQ(d.left_pairing(0, 0), 1);
  EXPECT_EQ(datum_from_json(datum_to_json(d)), d);
  // Invertible: supplied pairings must agree with the computed ones.
  Json a2 = Json::parse(R"({"Lambda": [[1, -1], [0, 1]]})");
  const CartanDatum c(IntMat{{1, -1}, {0, 1}});
  Json ok = a2;
  ok["pairings"] = {{"denominator", c.D()},
                    {"left", {{c.left_pairing(0, 0), c.left_pairing(0, 1)}, {c.left_pairing(1, 0), c.left_pairing(1, 1)}}},
                    {"right",
                     {{c.right_pairing(0, 0), c.right_pairing(0, 1)}, {c.right_pairing(1, 0), c.right_pairing(1, 1)}}}};
  EXPECT_EQ(datum_from_json(ok), c);
  Json bad = ok;
  bad["pairings"]["left"][0][0] = c.left_pairing(0, 0) + 1;
  bad["pairings"]["right"][0][0] = c.right_pairing(0, 0) - 1;
  EXPECT_THROW(datum_from_json(bad), ValidationError);
}

TEST(Io, Weights) {
  EXPECT_EQ(parse_weight("1,0", 2), (std::vector<int>{1, 0}));
  EXPECT_THROW(parse_weight("1", 2), ValidationError);
  EXPECT_THROW(parse_weight("1,x", 2), ValidationError);
  EXPECT_THROW(parse_weight("-1,0", 2), ValidationError);
}

TEST(Io, Sl2ChainExport) {
  const CartanDatum sl2(IntMat{{1}});
  const CrystalGraph g = module_graph(sl2, {2});
  const Json j = graph_to_json(sl2, g);
  EXPECT_EQ(j["nodes"].size(), 3u);
  ASSERT_EQ(j["edges"].size(), 2u);
  for (const auto& e : j["edges"]) EXPECT_EQ(e["color"], "1");
  EXPECT_EQ(j["highest_weight"], Json::array({2}));
  EXPECT_EQ(j["eps"]["1"], Json::array({0, 1, 2}));
  EXPECT_EQ(j["phi"]["1"], Json::array({2, 1, 0}));
  const std::string dot = export_dot(sl2, g);
  EXPECT_NE(dot.find("0 -> 1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2 [label=\"1\"]"), std::string::npos);
}

TEST(Io, RoundTrip) {
  const CartanDatum a2(IntMat{{1, -1}, {0, 1}});
  const CrystalGraph B = build_crystal(std::make_shared<HalfAlgebra>(a2, 3), 3).graph();
  for (const CrystalGraph& g : {B, module_graph(a2, {1, 1})}) {
    const std::string text = export_json(a2, g);
    const auto [d, h] = import_json(text);
    EXPECT_EQ(export_json(d, h), text);
    EXPECT_EQ(h.f_edge, g.f_edge);
    EXPECT_EQ(h.e_edge, g.e_edge);
    EXPECT_EQ(h.grade, g.grade);
  }
  EXPECT_THROW(import_json("{"), ValidationError);
}

TEST(Io, EmptyGraph) {
  const CartanDatum a2(IntMat{{1, -1}, {0, 1}});
  CrystalGraph g;
  g.rank = 2;
  g.binf = true;
  const std::string text = export_json(a2, g);
  const Json j = Json::parse(text);
  EXPECT_TRUE(j["nodes"].empty());
  EXPECT_TRUE(j["edges"].empty());
  EXPECT_EQ(export_json(a2, import_json(text).second), text);
  EXPECT_EQ(export_dot(a2, g), "digraph crystal {\n}\n");
}

TEST(Io, GlobalTable) {
  const CartanDatum a2(IntMat{{1, -1}, {0, 1}});
  const Crystal C = build_crystal(std::make_shared<HalfAlgebra>(a2, 2), 2);
  const GlobalGrade g = global_grade(C, {1, 1});
  const Json j = global_to_json(a2, g);
  EXPECT_EQ(j["grade"], Json::array({1, 1}));
  ASSERT_EQ(j["basis"].size(), 2u);
  std::set<std::string> exps;
  for (const auto& e : g.basis) exps.insert(format_expansion(a2, g, e));
  EXPECT_EQ(exps, (std::set<std::string>{"f1 f2", "f2 f1"}));
}
