#include <gtest/gtest.h>

#include <random>

#include "isospec/catalog.hpp"
#include "isospec/enumerate.hpp"
#include "isospec/invariants.hpp"
#include "isospec/transform.hpp"
#include "isospec/transplant.hpp"

using namespace isospec;

namespace {

LoopSignedGraph with_loop_sign(const LoopSignedGraph& g, int sign) {
  std::vector<SignedPerm> adj;
  for (const auto& a : g.adjacency()) {
    std::vector<std::size_t> t(g.vertices());
    std::vector<int> s(g.vertices(), 1);
    for (std::size_t v = 0; v < g.vertices(); ++v) {
      t[v] = a.target(v);
      if (t[v] == v) s[v] = sign;
    }
    adj.push_back(SignedPerm::from_images(t, s));
  }
  return LoopSignedGraph(g.vertices(), std::move(adj));
}

std::vector<LoopSignedGraph> enumerate_all(std::size_t v, Regime regime = Regime::Mixed, std::size_t colors = 3) {
  EnumOptions opts;
  opts.vertices = v;
  opts.colors = colors;
  opts.regime = regime;
  std::vector<LoopSignedGraph> out;
  enumerate_classes(opts, [&](const LoopSignedGraph& g) { out.push_back(g); });
  return out;
}

LoopSignedGraph single_neumann_vertex(std::size_t colors) {
  std::vector<ColourSpec> spec(colors, ColourSpec{{}, {{1, LoopSign::Neumann}}});
  return LoopSignedGraph::from_spec(1, spec);
}

}  // namespace

TEST(Transform, SwapLoopSignsChangesOnlySelectedDiagonal) {
  std::size_t checked = 0;
  for (std::size_t v = 1; v <= 4; ++v)
    for (const auto& g : enumerate_all(v))
      for (std::size_t c = 0; c < 3; ++c) {
        auto r = swap_loop_signs(g, {c});
        if (!r) continue;
        ++checked;
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t i = 0; i < v; ++i) {
            EXPECT_EQ(r->graph.partner(k, i), g.partner(k, i));
            if (k == c && g.is_loop(k, i))
              EXPECT_EQ(r->graph.loop_sign(k, i), -g.loop_sign(k, i));
            else
              EXPECT_EQ(r->graph.adjacency(k).sign(i), g.adjacency(k).sign(i));
          }
      }
  EXPECT_GT(checked, 0u);
}

TEST(Transform, SwapOnDiagonalColourNeedsNoConjugation) {
  CatalogPair st = catalog_square_triangle();
  auto r = swap_loop_signs(st.first, {0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->signs, (std::vector<int>{1, 1}));
  EXPECT_EQ(r->graph.loop_sign(0, 0), 1);
  EXPECT_EQ(r->graph.loop_sign(0, 1), -1);
}

TEST(Transform, DualizeAllDirichletGivesAllNeumann) {
  CatalogPair gww = catalog_gww();
  LoopSignedGraph d = with_loop_sign(gww.first, -1);
  auto r = dualize(d);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->graph, with_loop_sign(gww.first, 1));
  auto back = dualize(r->graph);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->graph, d);
}

TEST(Transform, DualPairWitnessTransports) {
  CatalogPair gww = catalog_gww();
  auto a = dualize(gww.first), b = dualize(gww.second);
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(verify_witness(a->graph, b->graph, transport_witness(*gww.witness, a->signs, b->signs)));
}

TEST(Transform, DualizeFailsOnNonBipartite) {
  CatalogPair band = catalog_band15();
  EXPECT_TRUE(dualize(band.first).has_value());
  EXPECT_FALSE(dualize(band.second).has_value());
}

TEST(Transform, BraidByItselfIsIdentity) {
  CatalogPair gww = catalog_gww();
  for (std::size_t c = 0; c < 3; ++c) {
    auto r = braid(gww.first, c, c);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->graph, gww.first);
  }
}

TEST(Transform, BraidPreservesTransplantability) {
  CatalogPair st = catalog_square_triangle();
  for (std::size_t c = 0; c < 2; ++c) {
    auto a = braid(st.first, c, 1 - c), b = braid(st.second, c, 1 - c);
    ASSERT_TRUE(a && b);
    EXPECT_TRUE(validate(a->graph).ok);
    EXPECT_TRUE(decide(a->graph, b->graph).yes);
  }
  CatalogPair gww = catalog_gww();
  auto a = braid(gww.first, 0, 1), b = braid(gww.second, 0, 1);
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(decide(a->graph, b->graph).yes);
}

TEST(Transform, ColourOperations) {
  CatalogPair st = catalog_square_triangle();
  LoopSignedGraph added = add_identity_colour(st.first, LoopSign::Neumann);
  EXPECT_EQ(added.colors(), 3u);
  EXPECT_EQ(omit_colour(added, 2), st.first);
  LoopSignedGraph copied = copy_colour(st.first, 1);
  EXPECT_EQ(copied.adjacency(2), st.first.adjacency(1));
  EXPECT_TRUE(decide(copied, copy_colour(st.second, 1)).yes);
  EXPECT_THROW(omit_colour(omit_colour(st.first, 0), 0), std::invalid_argument);
  EXPECT_THROW(copy_colour(st.first, 5), std::out_of_range);
}

TEST(Transform, OmitColourOnNeumannPairKeepsTransplantability) {
  CatalogPair gww = catalog_gww();
  LoopSignedGraph a = with_loop_sign(gww.first, 1), b = with_loop_sign(gww.second, 1);
  Decision d = decide(a, b);
  ASSERT_TRUE(d.yes);
  LoopSignedGraph a2 = omit_colour(a, 2), b2 = omit_colour(b, 2);
  EXPECT_TRUE(decide(a2, b2).yes);
  EXPECT_TRUE(verify_witness(a2, b2, *d.witness));
}

TEST(Transform, RemoveComponent) {
  CatalogPair gww = catalog_gww();
  CatalogPair st = catalog_square_triangle();
  LoopSignedGraph extra = add_identity_colour(st.first, LoopSign::Dirichlet);
  LoopSignedGraph g1 = disjoint_union(gww.first, extra), g2 = disjoint_union(gww.second, extra);
  auto r = remove_component(g1, g2, 1, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first, gww.first);
  EXPECT_EQ(r->second, gww.second);
  EXPECT_FALSE(remove_component(g1, g2, 0, 1).has_value());
}

TEST(Transform, CrossWithTrivialFactor) {
  for (const auto& g : enumerate_all(3, Regime::Neumann)) {
    EXPECT_EQ(cross(g, single_neumann_vertex(1)), g);
    LoopSignedGraph h = cross(single_neumann_vertex(1), g);
    EXPECT_EQ(h.colors(), 3u);
    EXPECT_TRUE(is_isomorphic(h, g).has_value());
  }
  EXPECT_THROW(cross(catalog_gww().first, single_neumann_vertex(1)), std::invalid_argument);
}

TEST(Transform, CrossSizesAndSymmetry) {
  const LoopSignedGraph a = enumerate_all(2, Regime::Neumann, 2).at(0);
  const LoopSignedGraph b = enumerate_all(3, Regime::Neumann, 2).at(0);
  LoopSignedGraph ab = cross(a, b), ba = cross(b, a);
  EXPECT_EQ(ab.vertices(), 6u);
  EXPECT_EQ(ab.colors(), 4u);
  EXPECT_TRUE(validate(ab).ok);
  // Colour [c1,c2] of ab is colour [c2,c1] of ba.
  std::vector<SignedPerm> reordered;
  for (std::size_t c = 0; c < 4; ++c) reordered.push_back(ba.adjacency((c % 2) * 2 + c / 2));
  EXPECT_TRUE(is_isomorphic(ab, LoopSignedGraph(6, reordered)).has_value());
}

TEST(Transform, CrossTracesFactorize) {
  auto gs = enumerate_all(3, Regime::Neumann);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    const auto& a = gs[rng() % gs.size()];
    const auto& b = gs[rng() % gs.size()];
    LoopSignedGraph ab = cross(a, b);
    Word w(rng() % 7), w1, w2;
    for (auto& c : w) {
      c = rng() % 9;
      w1.push_back(c % 3);
      w2.push_back(c / 3);
    }
    EXPECT_EQ(word_trace(ab, w), word_trace(a, w1) * word_trace(b, w2));
  }
}

TEST(Transform, SubstitutionPlanChecks) {
  CatalogPair st = catalog_square_triangle();
  LoopSignedGraph sub = LoopSignedGraph::from_spec(
      2, {ColourSpec{{}, {{1, LoopSign::Dirichlet}, {2, LoopSign::Neumann}}}, ColourSpec{{{1, 2}}, {}}});
  SubstitutionPlan bad{st.first, sub, {{{0}, {}}, {{}, {}}}};
  EXPECT_THROW(check_plan(bad), std::invalid_argument);
  SubstitutionPlan overlap{st.first, sub, {{{1}, {1}}, {{}, {}}}};
  EXPECT_THROW(substitute(overlap), std::invalid_argument);
  SubstitutionPlan ok{st.first, sub, {{{1}, {}}, {{}, {}}}};
  EXPECT_NO_THROW(check_plan(ok));
  EXPECT_TRUE(validate(substitute(ok)).ok);
}

TEST(Transform, SubstituteIntoSingleVertexHost) {
  CatalogPair st = catalog_square_triangle();
  LoopSignedGraph host = single_neumann_vertex(2);
  SubstitutionPlan plan{host, st.first, {{{1}, {}}, {{}, {}}}};
  EXPECT_EQ(substitute(plan), st.first);
}

TEST(Transform, SubstitutionTreelikeAndConnected) {
  std::mt19937_64 rng(12);
  std::vector<LoopSignedGraph> trees;
  for (std::size_t v = 1; v <= 3; ++v)
    for (const auto& g : enumerate_all(v))
      if (is_treelike(g)) trees.push_back(g);
  std::size_t tested = 0;
  for (int k = 0; k < 400; ++k) {
    const auto& host = trees[rng() % trees.size()];
    const auto& sub = trees[rng() % trees.size()];
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t chi = 0; chi < 3; ++chi)
      for (std::size_t v = 0; v < sub.vertices(); ++v)
        if (sub.is_loop(chi, v) && sub.loop_sign(chi, v) == 1) slots.emplace_back(chi, v);
    if (slots.size() < 3) continue;
    std::shuffle(slots.begin(), slots.end(), rng);
    SubstitutionPlan plan{host, sub, std::vector<std::vector<std::vector<std::size_t>>>(3, std::vector<std::vector<std::size_t>>(3))};
    for (std::size_t c = 0; c < 3; ++c) plan.assignment[slots[c].first][c].push_back(slots[c].second);
    LoopSignedGraph g = substitute(plan);
    ++tested;
    EXPECT_TRUE(validate(g).ok);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_treelike(g));
  }
  EXPECT_GT(tested, 50u);
}
