#include <random>

#include <gtest/gtest.h>

#include "negsphere/serialize.hpp"
#include "support/trees.hpp"

namespace negsphere {
namespace {

TEST(Json, GroupElementRoundTrip) {
  const GroupElement g = word_to_matrix(MonodromyWord::parse("aabab"));
  const json j = to_json(g);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(group_element_from_json(j), g);
  EXPECT_THROW(group_element_from_json(json::parse("[[2,0],[0,1]]")), std::invalid_argument);
}

TEST(Json, RandomRewrittenGraphsRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 15);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    PlumbingGraph g = testing::random_tree(rng, size(rng), -8, 0);
    for (int step = 0; step < 3; ++step) {
      if (coin(rng) && g.edge_count() > 0) {
        g = blow_up_edge(g, g.edges().back());
      } else {
        g = blow_up_point_on_vertex(g, 0);
      }
    }
    const json j = to_json(g);
    ASSERT_EQ(graph_from_json(j), g);
    ASSERT_EQ(graph_from_json(json::parse(j.dump())), g);
  }
}

TEST(Json, SpecAndPlanRoundTrip) {
  for (int n = 2; n <= 12; ++n) {
    for (int k : {0, 1, 4}) {
      const auto r = best_sphere(n, k);
      ASSERT_TRUE(r);
      EXPECT_EQ(spec_from_json(to_json(r->spec)), r->spec);
      EXPECT_EQ(plan_from_json(to_json(r->plan)), r->plan);
    }
  }
  const FibrationSpec bare = spec_from_json(json::parse(R"({"n":2,"fibers":["E8t","E8t","IV"]})"));
  EXPECT_EQ(bare.provenance, Provenance::AssumedRealizable);
  EXPECT_THROW(spec_from_json(json::parse(R"({"n":2,"fibers":["E9"]})")), std::invalid_argument);
}

TEST(Json, SearchResultFields) {
  const auto r = best_sphere(2, 1);
  ASSERT_TRUE(r);
  const json j = to_json(*r);
  EXPECT_EQ(j.at("best_square"), r->best_square);
  EXPECT_EQ(j.at("b2"), 23);
  EXPECT_EQ(j.at("provenance"), "paper_verified");
  EXPECT_TRUE(j.at("satisfies_C5").get<bool>());
  EXPECT_EQ(j.at("ratio").at("den").get<std::int64_t>() * r->best_square,
            j.at("ratio").at("num").get<std::int64_t>() * 23);
  EXPECT_EQ(graph_from_json(j.at("graph")), r->realization.graph);
  EXPECT_EQ(j.at("trace").size(), r->realization.narrative.size());
}

TEST(Json, CatalogShape) {
  const json c = catalog_json();
  ASSERT_EQ(c.size(), 8u);
  for (const json& t : c) {
    EXPECT_TRUE(t.contains("name"));
    EXPECT_EQ(t.at("euler").get<std::size_t>(), t.at("word").get<std::string>().size());
    EXPECT_TRUE(t.at("fragment").is_null() || t.at("fragment").is_object());
  }
  // (ab)^5 is the inverse of ab.
  EXPECT_EQ(c[0].at("monodromy"), json::parse("[[1,-1],[1,0]]"));
}

TEST(Dot, GraphMarksBlowupVertices) {
  PlumbingGraph g;
  g.add_vertex({"s", -2, 0, false});
  g.add_vertex({"t", -3, 0, false});
  g.add_edge(0, 1);
  g = blow_up_edge(g, Edge::of(0, 1));
  const std::string dot = to_dot(g, "demo");
  EXPECT_EQ(dot.rfind("graph demo {", 0), 0u);
  EXPECT_NE(dot.find("label=\"-3\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"-4\""), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v2"), std::string::npos);
  EXPECT_EQ(dot.find("v0 -- v1"), std::string::npos);
}

TEST(Dot, FragmentMarksAttachment) {
  const std::string dot = to_dot(*fiber(FiberKind::E8t).fragment, "E8t");
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

}  // namespace
}  // namespace negsphere
