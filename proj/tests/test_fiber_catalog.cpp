#include <algorithm>

#include <gtest/gtest.h>

#include "negsphere/fiber_catalog.hpp"

namespace negsphere {
namespace {

std::vector<std::int64_t> sorted_weights(const PlumbingFragment& f) {
  std::vector<std::int64_t> out;
  for (const Sphere& s : f.vertices) out.push_back(s.weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> degrees(const PlumbingFragment& f) {
  std::vector<int> d(f.vertices.size(), 0);
  for (const Edge& e : f.edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

TEST(Catalog, HasEightEntriesInKindOrder) {
  ASSERT_EQ(catalog().size(), 8u);
  for (int i = 0; i < kFiberKindCount; ++i) {
    EXPECT_EQ(static_cast<int>(catalog()[i].kind), i);
    EXPECT_EQ(parse_fiber_name(catalog()[i].name), catalog()[i].kind);
  }
  EXPECT_THROW(parse_fiber_name("II*"), std::invalid_argument);
}

TEST(Catalog, Words) {
  EXPECT_EQ(fiber(FiberKind::E8t).word.str(), "ababababab");
  EXPECT_EQ(fiber(FiberKind::E7t).word.str(), "ababababa");
  EXPECT_EQ(fiber(FiberKind::E6t).word.str(), "abababab");
  EXPECT_EQ(fiber(FiberKind::I0star).word.str(), "ababab");
  EXPECT_EQ(fiber(FiberKind::II_cusp).word.str(), "ab");
  EXPECT_EQ(fiber(FiberKind::III).word.str(), "aba");
  EXPECT_EQ(fiber(FiberKind::IV).word.str(), "abab");
  EXPECT_EQ(fiber(FiberKind::I1_nodal).word.str(), "a");
}

TEST(Catalog, EulerIsWordLength) {
  const std::vector<int> expected = {10, 9, 8, 6, 2, 3, 4, 1};
  for (const FiberType& t : catalog()) {
    EXPECT_EQ(t.euler, static_cast<int>(t.word.length())) << t.name;
    EXPECT_EQ(t.euler, expected[static_cast<int>(t.kind)]) << t.name;
  }
}

TEST(Catalog, FragmentAndResolutionPresence) {
  for (const FiberType& t : catalog()) {
    const bool normal_crossing = t.kind == FiberKind::E8t || t.kind == FiberKind::E7t ||
                                 t.kind == FiberKind::E6t || t.kind == FiberKind::I0star;
    const bool resolvable =
        t.kind == FiberKind::II_cusp || t.kind == FiberKind::III || t.kind == FiberKind::IV;
    EXPECT_EQ(t.fragment.has_value(), normal_crossing) << t.name;
    EXPECT_EQ(t.resolution.has_value(), resolvable) << t.name;
  }
}

TEST(Catalog, FragmentsAreNegativeSphereTrees) {
  for (const FiberType& t : catalog()) {
    if (!t.fragment) continue;
    const PlumbingFragment& f = *t.fragment;
    EXPECT_TRUE(f.is_tree()) << t.name;
    EXPECT_EQ(f.euler_characteristic(), t.euler) << t.name;
    EXPECT_EQ(f.vertices.size(), f.edges.size() + 1) << t.name;
    for (const Sphere& s : f.vertices) {
      EXPECT_EQ(s.weight, -2) << t.name;
      EXPECT_EQ(s.genus, 0) << t.name;
    }
    EXPECT_EQ(degrees(f)[f.attachment], 1) << t.name << " attaches at a leaf";
  }
}

TEST(Catalog, AffineDynkinShapes) {
  auto shape = [](FiberKind k) {
    auto d = degrees(*fiber(k).fragment);
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(fiber(FiberKind::E8t).fragment->vertices.size(), 9u);
  EXPECT_EQ(fiber(FiberKind::E8t).fragment->edges.size(), 8u);
  EXPECT_EQ(shape(FiberKind::E8t), (std::vector<int>{1, 1, 1, 2, 2, 2, 2, 2, 3}));
  EXPECT_EQ(fiber(FiberKind::E7t).fragment->vertices.size(), 8u);
  EXPECT_EQ(shape(FiberKind::E7t), (std::vector<int>{1, 1, 1, 2, 2, 2, 2, 3}));
  EXPECT_EQ(fiber(FiberKind::E6t).fragment->vertices.size(), 7u);
  EXPECT_EQ(shape(FiberKind::E6t), (std::vector<int>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(fiber(FiberKind::I0star).fragment->vertices.size(), 5u);
  EXPECT_EQ(shape(FiberKind::I0star), (std::vector<int>{1, 1, 1, 1, 4}));
}

TEST(Resolve, Cusp) {
  const Resolution r = resolve(fiber(FiberKind::II_cusp));
  EXPECT_EQ(r.blowups, 3);
  EXPECT_EQ(r.fragment.vertices.size(), 4u);
  EXPECT_EQ(r.fragment.edges.size(), 3u);
  EXPECT_EQ(sorted_weights(r.fragment), (std::vector<std::int64_t>{-6, -3, -2, -1}));
  EXPECT_EQ(r.fragment.vertices[r.fragment.attachment].weight, -6);
  // The (-1) sphere meets all three others.
  const auto d = degrees(r.fragment);
  for (std::size_t v = 0; v < d.size(); ++v) {
    EXPECT_EQ(d[v], r.fragment.vertices[v].weight == -1 ? 3 : 1);
  }
}

TEST(Resolve, TypeIII) {
  const Resolution r = resolve(fiber(FiberKind::III));
  EXPECT_EQ(r.blowups, 2);
  EXPECT_EQ(sorted_weights(r.fragment), (std::vector<std::int64_t>{-4, -4, -2, -1}));
  EXPECT_EQ(r.fragment.edges.size(), 3u);
  EXPECT_EQ(r.fragment.vertices[r.fragment.attachment].weight, -4);
  const auto d = degrees(r.fragment);
  for (std::size_t v = 0; v < d.size(); ++v) {
    EXPECT_EQ(d[v], r.fragment.vertices[v].weight == -1 ? 3 : 1);
  }
}

TEST(Resolve, TypeIV) {
  const Resolution r = resolve(fiber(FiberKind::IV));
  EXPECT_EQ(r.blowups, 1);
  EXPECT_EQ(sorted_weights(r.fragment), (std::vector<std::int64_t>{-3, -3, -3, -1}));
  EXPECT_EQ(r.fragment.edges.size(), 3u);
  EXPECT_EQ(r.fragment.vertices[r.fragment.attachment].weight, -3);
}

TEST(Resolve, EulerGrowsByBlowups) {
  for (FiberKind k : {FiberKind::II_cusp, FiberKind::III, FiberKind::IV}) {
    const Resolution r = resolve(fiber(k));
    EXPECT_TRUE(r.fragment.is_tree());
    EXPECT_EQ(r.fragment.euler_characteristic(), fiber(k).euler + r.blowups) << fiber(k).name;
  }
}

TEST(Resolve, RejectsOtherTypes) {
  for (FiberKind k : {FiberKind::E8t, FiberKind::E7t, FiberKind::E6t, FiberKind::I0star,
                      FiberKind::I1_nodal}) {
    try {
      resolve(fiber(k));
      FAIL() << "expected throw for " << fiber(k).name;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find("not a resolvable singular type"), std::string::npos);
    }
  }
}

TEST(CuspReplacement, SingleMinusNineSphere) {
  const Resolution r = cusp_replacement();
  EXPECT_EQ(r.blowups, 1);
  ASSERT_EQ(r.fragment.vertices.size(), 1u);
  EXPECT_EQ(r.fragment.vertices[0].weight, -9);
  EXPECT_EQ(r.fragment.attachment, 0);
  EXPECT_TRUE(r.fragment.edges.empty());
}

TEST(CuspReplacement, ContributesMinusElevenThroughOneEdge) {
  PlumbingGraph g;
  g.add_vertex({"section", 0, 0, false});
  g.add_vertex(cusp_replacement().fragment.vertices[0]);
  g.add_edge(0, 1);
  EXPECT_EQ(smooth(g), -11);
}

TEST(Catalog, MixedCuspProductsLandInPlusMinusIdentity) {
  // k letters pairs of ab: (ab)^k is +-1 exactly when 3 | k.
  const MonodromyWord cusp = fiber(FiberKind::II_cusp).word;
  const MonodromyWord e8 = fiber(FiberKind::E8t).word;
  for (int cusps = 0; cusps <= 6; ++cusps) {
    for (int e8s = 0; e8s <= 6; ++e8s) {
      const int pairs = cusps + 5 * e8s;
      const GroupElement g = word_to_matrix(cusp.power(cusps) + e8.power(e8s));
      if (pairs % 6 == 0) EXPECT_TRUE(is_identity(g));
      if (pairs % 6 == 3) EXPECT_EQ(g, GroupElement(-1, 0, 0, -1));
      if (pairs % 3 != 0) EXPECT_NE(g.m12(), 0);
    }
  }
}

}  // namespace
}  // namespace negsphere
