#include <gtest/gtest.h>

#include "isospec/catalog.hpp"
#include "isospec/enumerate.hpp"
#include "isospec/io.hpp"

using namespace isospec;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

std::string message_of(const std::string& text) {
  try {
    parse_graph_json(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, RoundTripEnumeratedGraphs) {
  for (std::size_t v = 1; v <= 4; ++v) {
    EnumOptions o;
    o.vertices = v;
    enumerate_classes(o, [](const LoopSignedGraph& g) {
      ASSERT_EQ(parse_graph_json(graph_to_json(g)), g);
      ASSERT_EQ(parse_graph_cycles(graph_to_cycles(g)), g);
      ASSERT_EQ(parse_graph(graph_to_cycles(g)), g);
    });
  }
}

TEST(Io, ParsesDocumentedJson) {
  std::string text =
      R"({"version":1,"vertices":7,"colors":3,"adjacency":[)"
      R"({"color":1,"edges":[[1,2],[4,5]],"loops":{"3":"D","6":"N","7":"D"}},)"
      R"({"color":2,"edges":[[3,4],[5,7]],"loops":{"1":"D","2":"N","6":"D"}},)"
      R"({"color":3,"edges":[[2,3],[5,6]],"loops":{"1":"N","4":"D","7":"N"}}]})";
  EXPECT_EQ(parse_graph_json(text), catalog_gww().first);
}

TEST(Io, ParsesCycleText) {
  std::string text =
      "c1: (1,8)(3,10)(5,12)(7,14) loops: 2N 4N 6N 9N 11N 13N 15N\n"
      "c2: (1,2)(4,7)(8,14)(9,12)(10,15)(11,13) loops: 3N 5N 6N\n"
      "c3: (1,6)(2,12)(3,10)(4,13)(5,11)(8,15) loops: 7N 9N 14N\n";
  EXPECT_EQ(parse_graph_cycles(text), catalog_band15().first);
}

TEST(Io, JsonDiagnosticsNameTheField) {
  EXPECT_NE(message_of("{"), "");
  EXPECT_NE(message_of(R"({"version":2,"vertices":1,"colors":1,"adjacency":[]})").find("version"), std::string::npos);
  std::string dup = R"({"version":1,"vertices":2,"colors":1,"adjacency":[{"color":1,"edges":[[1,2]],"loops":{"1":"N"}}]})";
  EXPECT_NE(message_of(dup).find("adjacency[0]"), std::string::npos);
  std::string missing = R"({"version":1,"vertices":2,"colors":1,"adjacency":[{"color":1,"edges":[],"loops":{"1":"N"}}]})";
  EXPECT_NE(message_of(missing), "");
  std::string sign = R"({"version":1,"vertices":1,"colors":1,"adjacency":[{"color":1,"edges":[],"loops":{"1":"X"}}]})";
  EXPECT_NE(message_of(sign).find("loops"), std::string::npos);
  std::string range = R"({"version":1,"vertices":2,"colors":1,"adjacency":[{"color":1,"edges":[[1,3]],"loops":{}}]})";
  EXPECT_NE(message_of(range).find("edges[0]"), std::string::npos);
}

TEST(Io, CycleTextDiagnostics) {
  EXPECT_THROW(parse_graph_cycles("c1: (1,2) loops: 3Q\n"), InputError);
  EXPECT_THROW(parse_graph_cycles("c1: (1,2)(2,3)\n"), InputError);
  EXPECT_THROW(parse_graph_cycles("c2: (1,2)\n"), InputError);
}

TEST(Io, WitnessRoundTrip) {
  RatMatrix t = RatMatrix::from_rows({{Rational(-1, 2), 1}, {Rational(3), Rational(2, 7)}});
  EXPECT_EQ(parse_witness_json(witness_to_json(t)), t);
  EXPECT_EQ(parse_witness_json("[[-1,1],[1,1]]"), RatMatrix::from_int_rows({{-1, 1}, {1, 1}}));
  EXPECT_THROW(parse_witness_json("[[1,2],[3]]"), InputError);
  EXPECT_THROW(parse_witness_json("[[\"1/0\"]]"), InputError);
}

TEST(Io, DotExport) {
  std::string dot = export_dot(catalog_gww().first);
  EXPECT_EQ(count(dot, " -- "), 6u + 9u);
  EXPECT_EQ(count(dot, "label=\"D\""), 5u);
  EXPECT_EQ(count(dot, "label=\"N\""), 4u);
  EXPECT_EQ(count(dot, "style=dashed"), 2u + 3u);
  EXPECT_EQ(dot, export_dot(catalog_gww().first));
  LoopSignedGraph one = LoopSignedGraph::from_spec(1, {ColourSpec{{}, {{1, LoopSign::Neumann}}}});
  std::string d1 = export_dot(one);
  EXPECT_EQ(count(d1, " -- "), 1u);
  EXPECT_EQ(count(d1, "label=\"N\""), 1u);
}

TEST(Io, WordsGeneratorsAndPlans) {
  EXPECT_EQ(parse_word("1 2 1"), (Word{0, 1, 0}));
  EXPECT_TRUE(parse_word("e").empty());
  EXPECT_EQ(word_to_string({0, 2}), "1 3");
  EXPECT_THROW(parse_word("0"), InputError);
  auto gens = parse_generators_json(R"j({"size":2,"generators":["(-1)","(1,2)"]})j");
  EXPECT_EQ(gens, catalog_d4().generators);
  EXPECT_THROW(parse_generators_json(R"j({"size":2,"generators":["(1,3)"]})j"), InputError);
  CatalogPair st = catalog_square_triangle();
  std::string plan = R"({"host":)" + graph_to_json(st.first) + R"(,"substituent":)" + graph_to_json(st.first) +
                     R"(,"assignment":[[[2],[]],[[],[]]]})";
  SubstitutionPlan p = parse_substitution_json(plan);
  EXPECT_EQ(p.assignment[0][0], (std::vector<std::size_t>{1}));
}
