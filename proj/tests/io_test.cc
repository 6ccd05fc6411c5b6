// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "transit/io.h"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"
#include "transit/fixture.h"

namespace transit {
namespace {

using ::transit::testing::MatchingStrategy;
using ::transit::testing::Matrix6;
using ::transit::testing::P;
using ::transit::testing::R;

std::string FixturePath(const std::string& file) {
  return std::string(TRANSIT_FIXTURE_DIR) + "/" + file;
}

TEST(JsonTest, MalformedInputIsAParseError) {
  EXPECT_THROW(ParseJson("{\"a\": [1, 2"), ParseError);
  EXPECT_THROW(LoadJsonFile(FixturePath("no-such-file.json")), ParseError);
  try {
    ParseJson("[", "broken.json");
  } catch (const Error& e) {
    EXPECT_EQ(e.exit_code(), 2);
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
}

TEST(JsonTest, NumbersAreReadExactly) {
  EXPECT_EQ(JsonToRational(ParseJson("3")), R(3));
  EXPECT_EQ(JsonToRational(ParseJson("0.1")), R(1, 10));
  EXPECT_EQ(JsonToRational(ParseJson("\"-7/3\"")), R(-7, 3));
  EXPECT_THROW(JsonToRational(ParseJson("true")), ParseError);
  EXPECT_THROW(JsonToRational(ParseJson("\"x\"")), ParseError);
}

TEST(JsonTest, NumbersAreWrittenWithExactForm) {
  Json j = NumberToJson(R(7, 16));
  EXPECT_EQ(j["exact"], "7/16");
  EXPECT_DOUBLE_EQ(j["decimal"].get<double>(), 0.4375);
  EXPECT_EQ(NumberToJson(1.0 / 3.0).get<double>(), 0.333333333333);
  EXPECT_EQ(NumberToJson(std::numeric_limits<double>::infinity()), "inf");
}

TEST(GameJsonTest, RoundTrip) {
  Game<R> g = MatchingStrategy({2, 2, 3});
  Json j = GameToJson(g);
  Game<R> back = GameFromJson<R>(j);
  EXPECT_EQ(back.shape(), g.shape());
  EXPECT_EQ(back.payoffs(), g.payoffs());
  EXPECT_EQ(Dump(GameToJson(back)), Dump(j));
}

TEST(GameJsonTest, RejectsRaggedOrMistypedTensors) {
  Json j = GameToJson(Matrix6(4, 3, 2));
  Json ragged = j;
  ragged["payoffs"][0][1] = Json::array({1});
  EXPECT_THROW(GameFromJson<R>(ragged), Error);
  Json bad_conv = j;
  bad_conv["convention"] = "sideways";
  EXPECT_THROW(GameFromJson<R>(bad_conv), Error);
  Json missing = j;
  missing.erase("payoffs");
  EXPECT_THROW(GameFromJson<R>(missing), ParseError);
}

TEST(SolutionJsonTest, RoundTripAndEmpty) {
  SolutionSet d({2, 3}, {P({0, 2}), P({1, 1})}, "mine");
  SolutionSet back = SolutionSetFromJson(SolutionSetToJson(d), {2, 3});
  EXPECT_EQ(back.members(), d.members());
  EXPECT_EQ(back.label(), "mine");
  SolutionSet empty = SolutionSetFromJson(
      LoadJsonFile(std::string(TRANSIT_SOURCE_DIR) + "/tests/data/empty_solutions.json"),
      {2, 2});
  EXPECT_TRUE(empty.empty());
  EXPECT_THROW(SolutionSetFromJson(ParseJson(R"({"members": [[0, 5]]})"), {2, 2}),
               InvalidInput);
}

TEST(StructuredJsonTest, CongestionAndPolymatrixRoundTrip) {
  CongestionGame<R> cg = ParallelLinks<R>(3);
  CongestionGame<R> back = CongestionFromJson<R>(CongestionToJson(cg));
  EXPECT_EQ(back.costs, cg.costs);
  EXPECT_EQ(back.strategies, cg.strategies);

  PolymatrixGame<R> pg;
  pg.shape = {2, 2};
  pg.matrices[{0, 1}] = {{R(1), R(0)}, {R(0), R(2)}};
  PolymatrixGame<R> pback = PolymatrixFromJson<R>(PolymatrixToJson(pg));
  EXPECT_EQ(pback.shape, pg.shape);
  EXPECT_EQ(pback.Get(0, 1), pg.Get(0, 1));
}

TEST(NetworkJsonTest, RoundTrip) {
  RoutingInstance inst = Prop4Instance();
  inst.edges[0].cost = CostFunction::PiecewiseLinear({{0, 1}, {2, 3}});
  RoutingInstance back = NetworkFromJson(NetworkToJson(inst));
  ASSERT_EQ(back.edges.size(), inst.edges.size());
  EXPECT_EQ(back.edges[0].cost.kind(), CostFunction::Kind::kPiecewiseLinear);
  EXPECT_EQ(back.edges[0].cost.points(), inst.edges[0].cost.points());
  EXPECT_EQ(back.edges[1].cost.coefficients(), inst.edges[1].cost.coefficients());
  EXPECT_EQ(back.commodities[0].paths, inst.commodities[0].paths);
}

TEST(GraphInputTest, EdgeListFormat) {
  GraphColoringInstance g = GraphFromEdgeList("# square\n0 1\n1 2\n2 3 # last\n3 0\n");
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.graph.num_edges(), 4);
  EXPECT_TRUE(g.graph.IsCycle());
  GraphColoringInstance padded = GraphFromEdgeList("nodes 6\n0 1\n");
  EXPECT_EQ(padded.num_nodes(), 6);
  EXPECT_THROW(GraphFromEdgeList("0 1 2\n"), ParseError);
  EXPECT_THROW(GraphFromEdgeList("a b\n"), ParseError);
  EXPECT_THROW(GraphFromEdgeList("0 0\n"), InvalidInput);
}

TEST(GraphInputTest, JsonRoundTrip) {
  GraphColoringInstance g(Graph::Star(3));
  GraphColoringInstance back = GraphFromJson(GraphToJson(g));
  EXPECT_EQ(back.graph.edges(), g.graph.edges());
  EXPECT_TRUE(back.TwoColour());
}

TEST(ReportJsonTest, UndefinedMeasuresCarryNotes) {
  Game<R> g(Convention::kMaximize, {2}, {R(1), R(2)});
  PriceReport<R> r = ComputePrices(g, SolutionSet({2}, {P({0})}));
  Json j = PriceReportToJson(r);
  EXPECT_FALSE(j["posta"]["defined"].get<bool>());
  EXPECT_FALSE(j["posta"]["reason"].get<std::string>().empty());
  EXPECT_EQ(j["pota"]["value"]["exact"], "1/2");
}

TEST(ReportJsonTest, DumpIsStable) {
  Game<R> g = MatchingStrategy({2, 2, 3});
  PriceReport<R> r = ComputePrices(g, EnumeratePureNe(g));
  EXPECT_EQ(Dump(PriceReportToJson(r)), Dump(PriceReportToJson(r)));
  EXPECT_EQ(Dump(PriceReportToJson(r)).back(), '\n');
}

TEST(ExpectationTest, ComparisonReportsPaths) {
  Json expected = ParseJson(R"({"a": "1/2", "b": [1.0, 2], "c": 3})");
  Json same = ParseJson(R"({"a": "1/2", "b": [1.0000000001, 2], "c": 3, "extra": 0})");
  EXPECT_TRUE(CompareExpectations(expected, same).empty());
  Json off = ParseJson(R"({"a": "1/3", "b": [1.1, 2], "c": 4})");
  std::vector<std::string> diffs = CompareExpectations(expected, off);
  ASSERT_EQ(diffs.size(), 3u);
  EXPECT_NE(diffs[0].find("/a"), std::string::npos);
}

class FixtureTest : public ::testing::TestWithParam<ManifestEntry> {};

TEST_P(FixtureTest, AnalyzerMatchesExpectation) {
  const ManifestEntry& e = GetParam();
  Json input = LoadJsonFile(FixturePath(e.file));
  Json expected = LoadJsonFile(FixturePath(e.name + ".expected.json"));
  EXPECT_EQ(InputKind(input), e.kind);
  std::vector<std::string> diffs = CompareExpectations(expected, AnalyzeFixture(input));
  for (const auto& d : diffs) ADD_FAILURE() << e.name << " " << d;
}

TEST_P(FixtureTest, OracleMatchesExpectation) {
  const ManifestEntry& e = GetParam();
  Json input = LoadJsonFile(FixturePath(e.file));
  Json expected = LoadJsonFile(FixturePath(e.name + ".expected.json"));
  std::vector<std::string> diffs = CompareExpectations(expected, OracleFixture(input));
  for (const auto& d : diffs) ADD_FAILURE() << e.name << " " << d;
}

TEST_P(FixtureTest, AnalysisIsDeterministic) {
  Json input = LoadJsonFile(FixturePath(GetParam().file));
  EXPECT_EQ(Dump(AnalyzeFixture(input)), Dump(AnalyzeFixture(input)));
}

INSTANTIATE_TEST_SUITE_P(Manifest, FixtureTest,
                         ::testing::ValuesIn(LoadManifest(TRANSIT_FIXTURE_DIR)),
                         [](const ::testing::TestParamInfo<ManifestEntry>& info) {
                           std::string name = info.param.name;
                           for (char& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return name;
                         });

}  // namespace
}  // namespace transit
