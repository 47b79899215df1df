#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "isospec/catalog.hpp"
#include "isospec/graph.hpp"

using namespace isospec;

namespace {

constexpr LoopSign D = LoopSign::Dirichlet;
constexpr LoopSign N = LoopSign::Neumann;

std::vector<std::size_t> random_relabel(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Graph, ValidateAcceptsCatalog) {
  for (const auto& p : {catalog_gww(), catalog_square_triangle(), catalog_band15()}) {
    EXPECT_TRUE(validate(p.first).ok);
    EXPECT_TRUE(validate(p.second).ok);
  }
}

TEST(Graph, ValidateRejectsDuplicateIncidence) {
  LoopSignedGraph g = LoopSignedGraph::from_spec(3, {ColourSpec{{{1, 2}}, {{2, N}, {3, D}}}});
  ValidationResult r = validate(g);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.message.empty());
}

TEST(Graph, ValidateRejectsMissingVertex) {
  LoopSignedGraph g = LoopSignedGraph::from_spec(3, {ColourSpec{{{1, 2}}, {}}});
  EXPECT_FALSE(validate(g).ok);
}

TEST(Graph, ValidateRejectsAsymmetricMatrix) {
  LoopSignedGraph g(3, {parse_signed_cycles("(1,2,3)", 3)});
  EXPECT_FALSE(validate(g).ok);
  LoopSignedGraph h(2, {parse_signed_cycles("(1,-2)", 2)});
  EXPECT_FALSE(validate(h).ok);
}

TEST(Graph, LoopsAndPartners) {
  CatalogPair gww = catalog_gww();
  const LoopSignedGraph& g = gww.first;
  EXPECT_EQ(g.partner(0, 0), 1u);
  EXPECT_TRUE(g.is_loop(0, 2));
  EXPECT_EQ(g.loop_sign(0, 2), -1);
  EXPECT_EQ(g.loop_sign(0, 5), 1);
  EXPECT_TRUE(g.has_dirichlet_loop());
  EXPECT_TRUE(g.has_neumann_loop());
}

TEST(Graph, ComponentsAndConnectivity) {
  LoopSignedGraph g = LoopSignedGraph::from_spec(
      4, {ColourSpec{{{1, 3}}, {{2, N}, {4, D}}}, ColourSpec{{}, {{1, N}, {2, N}, {3, D}, {4, N}}}});
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<std::size_t>{1}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(catalog_gww().first));
}

TEST(Graph, TreelikeAndBipartite) {
  CatalogPair gww = catalog_gww();
  EXPECT_EQ(edge_count(gww.first), 6u);
  EXPECT_TRUE(is_treelike(gww.first));
  EXPECT_TRUE(is_bipartite_loopless(gww.first));
  CatalogPair band = catalog_band15();
  EXPECT_TRUE(is_bipartite_loopless(band.first));
  EXPECT_FALSE(is_bipartite_loopless(band.second));
  EXPECT_FALSE(is_treelike(band.first));
  // Double edge: two colours joining the same vertices is a cycle.
  LoopSignedGraph two = LoopSignedGraph::from_spec(2, {ColourSpec{{{1, 2}}, {}}, ColourSpec{{{1, 2}}, {}}});
  EXPECT_FALSE(is_treelike(two));
  EXPECT_TRUE(is_bipartite_loopless(two));
}

TEST(Graph, LooplessVersion) {
  EdgeColouredGraph e = loopless_version(catalog_gww().first);
  EXPECT_EQ(e.vertices, 7u);
  EXPECT_EQ(e.colors, 3u);
  ASSERT_EQ(e.edges.size(), 6u);
  EXPECT_EQ(e.edges[0], (ColouredEdge{0, 1, 0}));
}

TEST(Graph, PermuteAndIsomorphism) {
  std::mt19937_64 rng(3);
  CatalogPair gww = catalog_gww();
  for (int k = 0; k < 20; ++k) {
    auto perm = random_relabel(7, rng);
    LoopSignedGraph h = permute(gww.first, perm);
    EXPECT_TRUE(validate(h).ok);
    EXPECT_EQ(canonical_form(h).code, canonical_form(gww.first).code);
    auto iso = is_isomorphic(gww.first, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(permute(gww.first, *iso), h);
  }
}

TEST(Graph, CanonicalRelabelingIsCanonical) {
  CatalogPair band = catalog_band15();
  CanonicalCode c = canonical_form(band.second);
  LoopSignedGraph h = permute(band.second, c.relabeling);
  CanonicalCode c2 = canonical_form(h);
  EXPECT_EQ(c2.code, c.code);
  std::vector<std::size_t> id(15);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(c2.relabeling, id);
}

// Independent oracle: exhaustive search over all 7! relabelings.
TEST(Graph, SevenVertexPairNotIsomorphicByBruteForce) {
  CatalogPair gww = catalog_gww();
  std::vector<std::size_t> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    if (permute(gww.first, perm) == gww.second) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  EXPECT_FALSE(found);
  EXPECT_FALSE(is_isomorphic(gww.first, gww.second).has_value());
  EXPECT_NE(canonical_form(gww.first).code, canonical_form(gww.second).code);
}

TEST(Graph, DisconnectedCanonicalFormIgnoresComponentOrder) {
  LoopSignedGraph a = LoopSignedGraph::from_spec(1, {ColourSpec{{}, {{1, D}}}});
  LoopSignedGraph b = LoopSignedGraph::from_spec(2, {ColourSpec{{{1, 2}}, {}}});
  EXPECT_EQ(canonical_form(disjoint_union(a, b)).code, canonical_form(disjoint_union(b, a)).code);
  EXPECT_TRUE(is_isomorphic(disjoint_union(a, b), disjoint_union(b, a)).has_value());
}

TEST(Graph, DoubleCover) {
  LoopSignedGraph g = LoopSignedGraph::from_spec(2, {ColourSpec{{}, {{1, D}, {2, N}}}, ColourSpec{{{1, 2}}, {}}});
  LoopSignedGraph dc = double_cover(g);
  EXPECT_EQ(dc.vertices(), 4u);
  EXPECT_TRUE(validate(dc).ok);
  EXPECT_FALSE(dc.has_dirichlet_loop());
  // A Dirichlet loop becomes an edge between the two copies.
  EXPECT_EQ(dc.partner(0, 0), 2u);
  EXPECT_TRUE(dc.is_loop(0, 1));
}

TEST(Graph, InducedSubgraphAndUnion) {
  CatalogPair st = catalog_square_triangle();
  LoopSignedGraph u = disjoint_union(st.first, st.second);
  EXPECT_EQ(u.vertices(), 4u);
  EXPECT_EQ(components(u).size(), 2u);
  EXPECT_EQ(induced_subgraph(u, {2, 3}), st.second);
  EXPECT_EQ(induced_subgraph(u, {0, 1}), st.first);
}
