#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "isospec/catalog.hpp"
#include "isospec/enumerate.hpp"

using namespace isospec;

namespace {

std::vector<LoopSignedGraph> enumerate_all(const EnumOptions& opts) {
  std::vector<LoopSignedGraph> out;
  enumerate_classes(opts, [&](const LoopSignedGraph& g) { out.push_back(g); });
  return out;
}

EnumOptions options(std::size_t v, std::size_t colors = 3, Regime regime = Regime::Mixed) {
  EnumOptions o;
  o.vertices = v;
  o.colors = colors;
  o.regime = regime;
  return o;
}

// All symmetric signed permutations of n points, restricted to one loop sign
// when sign != 0.
void involutions(std::size_t n, int sign, std::vector<std::size_t>& t, std::vector<int>& s, std::size_t v,
                 std::vector<SignedPerm>& out) {
  if (v == n) {
    out.push_back(SignedPerm::from_images(t, s));
    return;
  }
  if (t[v] != n) {
    involutions(n, sign, t, s, v + 1, out);
    return;
  }
  for (int sg : {-1, 1}) {
    if (sign && sg != sign) continue;
    t[v] = v;
    s[v] = sg;
    involutions(n, sign, t, s, v + 1, out);
  }
  for (std::size_t w = v + 1; w < n; ++w)
    if (t[w] == n) {
      t[v] = w;
      t[w] = v;
      s[v] = s[w] = 1;
      involutions(n, sign, t, s, v + 1, out);
      t[w] = n;
    }
  t[v] = n;
}

std::vector<SignedPerm> involutions(std::size_t n, int sign) {
  std::vector<std::size_t> t(n, n);
  std::vector<int> s(n, 1);
  std::vector<SignedPerm> out;
  involutions(n, sign, t, s, 0, out);
  return out;
}

// Labelled brute force: every colour tuple, deduplicated by canonical code.
std::pair<std::size_t, std::size_t> brute_force_counts(std::size_t n, std::size_t colors, int sign) {
  std::vector<SignedPerm> inv = involutions(n, sign);
  std::set<std::vector<std::uint32_t>> seen;
  std::size_t trees = 0;
  std::vector<std::size_t> idx(colors, 0);
  while (true) {
    std::vector<SignedPerm> adj;
    for (std::size_t i : idx) adj.push_back(inv[i]);
    LoopSignedGraph g(n, adj);
    if (is_connected(g) && seen.insert(canonical_form(g).code).second && is_treelike(g)) ++trees;
    std::size_t k = 0;
    while (k < colors && ++idx[k] == inv.size()) idx[k++] = 0;
    if (k == colors) break;
  }
  return {seen.size(), trees};
}

}  // namespace

TEST(Enumerate, BurnsideCountForTwoVertices) {
  // Labelled: 5^3 colourings minus 4^3 without an edge; swap-fixed: 3^3 - 2^3.
  std::size_t classes = ((125 - 64) + (27 - 8)) / 2;
  std::size_t trees = (3 * 16 + 3 * 4) / 2;
  EnumStats s = enumerate_classes(options(2), [](const LoopSignedGraph&) {});
  EXPECT_EQ(s.classes, classes);
  EXPECT_EQ(s.treelike, trees);
  EXPECT_EQ(classes, 40u);
  EXPECT_EQ(trees, 30u);
}

TEST(Enumerate, OrderlyMatchesLabelledBruteForce) {
  for (std::size_t colors = 1; colors <= 3; ++colors)
    for (std::size_t v = 1; v <= 4; ++v) {
      EnumStats s = enumerate_classes(options(v, colors), [](const LoopSignedGraph&) {});
      auto [classes, trees] = brute_force_counts(v, colors, 0);
      EXPECT_EQ(s.classes, classes) << "V=" << v << " C=" << colors;
      EXPECT_EQ(s.treelike, trees) << "V=" << v << " C=" << colors;
    }
}

TEST(Enumerate, HomogeneousMatchesBruteForce) {
  for (std::size_t v = 1; v <= 5; ++v) {
    auto [classes, trees] = brute_force_counts(v, 3, -1);
    EnumStats d = enumerate_classes(options(v, 3, Regime::Dirichlet), [](const LoopSignedGraph&) {});
    EnumStats n = enumerate_classes(options(v, 3, Regime::Neumann), [](const LoopSignedGraph&) {});
    EXPECT_EQ(d.classes, classes) << v;
    EXPECT_EQ(d.treelike, trees) << v;
    EXPECT_EQ(n.classes, classes) << v;
  }
}

TEST(Enumerate, EmittedGraphsAreSelfCanonicalAndValid) {
  std::vector<std::size_t> id;
  for (std::size_t v = 1; v <= 5; ++v) {
    id.resize(v);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : enumerate_all(options(v))) {
      ASSERT_TRUE(validate(g).ok);
      ASSERT_TRUE(is_connected(g));
      ASSERT_EQ(canonical_form(g).relabeling, id);
    }
  }
}

TEST(Enumerate, RegimeLoopSigns) {
  for (const auto& g : enumerate_all(options(4, 3, Regime::Dirichlet))) EXPECT_FALSE(g.has_neumann_loop());
  for (const auto& g : enumerate_all(options(4, 3, Regime::Neumann))) EXPECT_FALSE(g.has_dirichlet_loop());
}

TEST(Enumerate, ShardsPartitionTheClasses) {
  EnumStats whole = enumerate_classes(options(6), [](const LoopSignedGraph&) {});
  for (std::size_t k : {2, 3, 7}) {
    std::size_t classes = 0, trees = 0;
    std::set<std::vector<std::uint32_t>> codes;
    for (std::size_t i = 0; i < k; ++i) {
      EnumOptions o = options(6);
      o.shard_count = k;
      o.shard_index = i;
      EnumStats s = enumerate_classes(o, [&](const LoopSignedGraph& g) { codes.insert(canonical_form(g).code); });
      classes += s.classes;
      trees += s.treelike;
    }
    EXPECT_EQ(classes, whole.classes);
    EXPECT_EQ(trees, whole.treelike);
    EXPECT_EQ(codes.size(), whole.classes);
  }
  EnumOptions bad = options(3);
  bad.shard_count = 2;
  bad.shard_index = 2;
  EXPECT_THROW(enumerate_classes(bad, [](const LoopSignedGraph&) {}), std::invalid_argument);
}

TEST(Enumerate, TreelikeOnlyAndLimit) {
  EnumOptions o = options(5);
  o.treelike_only = true;
  std::size_t n = 0;
  EnumStats s = enumerate_classes(o, [&](const LoopSignedGraph& g) {
    ++n;
    EXPECT_TRUE(is_treelike(g));
  });
  EXPECT_EQ(n, 2304u);
  EXPECT_EQ(s.treelike, 2304u);
  EnumOptions lim = options(5);
  lim.limit = 10;
  EnumStats t = enumerate_classes(lim, [](const LoopSignedGraph&) {});
  EXPECT_TRUE(t.truncated);
  EXPECT_EQ(t.classes, 10u);
}

TEST(Enumerate, CensusSmallRowsAndThreads) {
  CensusOptions o;
  o.enumeration = options(4);
  CensusRow a = census(o);
  EXPECT_EQ(a.class_count, 737u);
  EXPECT_EQ(a.pair_count, 118u);
  EXPECT_EQ(a.treelike_pair_count, 64u);
  EXPECT_EQ(a.class_pair_count, 28u);
  EXPECT_EQ(a.pairs.size(), a.pair_count);
  o.threads = 3;
  CensusRow b = census(o);
  EXPECT_EQ(b.class_count, a.class_count);
  EXPECT_EQ(b.pair_count, a.pair_count);
  EXPECT_EQ(b.class_pair_count, a.class_pair_count);
  o.threads = 1;
  o.seed = 99;
  CensusRow c = census(o);
  EXPECT_EQ(c.pair_count, a.pair_count);
}

TEST(Enumerate, ExhaustiveBucketsAgree) {
  CensusOptions o;
  o.enumeration = options(4);
  o.exhaustive_buckets = true;
  std::size_t yes = 0;
  o.on_decision = [&](const LoopSignedGraph&, const LoopSignedGraph&, bool v) { yes += v; };
  CensusRow r = census(o);
  EXPECT_EQ(r.pair_count, 118u);
  EXPECT_EQ(yes, 118u);
}

TEST(Enumerate, FindPairsAndColourClasses) {
  CatalogPair gww = catalog_gww();
  CatalogPair band = catalog_band15();
  LoopSignedGraph other(7, {gww.first.adjacency(1), gww.first.adjacency(1), gww.first.adjacency(2)});
  auto pairs = find_pairs({gww.first, other, gww.second});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_TRUE(pairs[0].treelike);
  // Permuting colours of a pair lands in the same colour class.
  std::vector<ClassPair> list = pairs;
  auto swap = [](const LoopSignedGraph& g) {
    return LoopSignedGraph(g.vertices(), {g.adjacency(2), g.adjacency(0), g.adjacency(1)});
  };
  list.push_back({swap(gww.first), swap(gww.second), true});
  list.push_back({band.first, band.second, false});
  auto labels = colour_classes(list);
  EXPECT_EQ(labels[0], labels[1]);
  EXPECT_NE(labels[0], labels[2]);
  EXPECT_EQ(count_classes(labels), 2u);
  EXPECT_EQ(count_classes(quilt_classes({list[2]})), 1u);
}

TEST(Enumerate, RegimeNames) {
  EXPECT_EQ(regime_from_string("dirichlet"), Regime::Dirichlet);
  EXPECT_STREQ(to_string(Regime::Neumann), "neumann");
  EXPECT_THROW(regime_from_string("robin"), std::invalid_argument);
}
