#include "isospec/catalog.hpp"

namespace isospec {

namespace {

constexpr LoopSign D = LoopSign::Dirichlet;
constexpr LoopSign N = LoopSign::Neumann;

// Vertices with no edge of the colour get a Neumann loop.
ColourSpec neumann_filled(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  ColourSpec spec;
  std::vector<bool> used(n + 1, false);
  for (auto [u, v] : edges) used[u] = used[v] = true;
  spec.edges = std::move(edges);
  for (std::size_t v = 1; v <= n; ++v)
    if (!used[v]) spec.loops.emplace_back(v, N);
  return spec;
}

}  // namespace

CatalogPair catalog_gww() {
  ColourSpec straight{{{1, 2}, {4, 5}}, {{3, D}, {6, N}, {7, D}}};
  ColourSpec zigzag{{{3, 4}, {5, 7}}, {{1, D}, {2, N}, {6, D}}};
  ColourSpec wavy{{{2, 3}, {5, 6}}, {{1, N}, {4, D}, {7, N}}};
  CatalogPair p;
  p.first = LoopSignedGraph::from_spec(7, {straight, zigzag, wavy});
  p.second = LoopSignedGraph::from_spec(7, {zigzag, straight, wavy});
  p.witness = RatMatrix::from_int_rows({{-1, 1, 1, 0, 0, 0, 1},
                                        {1, 1, 0, 1, 1, 0, 0},
                                        {1, 0, 1, -1, 0, 1, 0},
                                        {0, 1, -1, 0, -1, 1, 0},
                                        {0, 1, 0, -1, 0, -1, -1},
                                        {0, 0, 1, 1, -1, 0, -1},
                                        {1, 0, 0, 0, -1, -1, 1}});
  return p;
}

CatalogPair catalog_square_triangle() {
  ColourSpec straight{{}, {{1, D}, {2, N}}};
  ColourSpec zigzag{{{1, 2}}, {}};
  CatalogPair p;
  p.first = LoopSignedGraph::from_spec(2, {straight, zigzag});
  p.second = LoopSignedGraph::from_spec(2, {zigzag, straight});
  p.witness = RatMatrix::from_int_rows({{-1, 1}, {1, 1}});
  return p;
}

CatalogPair catalog_band15() {
  constexpr std::size_t n = 15;
  CatalogPair p;
  p.first = LoopSignedGraph::from_spec(
      n, {neumann_filled(n, {{1, 8}, {3, 10}, {5, 12}, {7, 14}}),
          neumann_filled(n, {{1, 2}, {4, 7}, {8, 14}, {9, 12}, {10, 15}, {11, 13}}),
          neumann_filled(n, {{1, 6}, {2, 12}, {3, 10}, {4, 13}, {5, 11}, {8, 15}})});
  p.second = LoopSignedGraph::from_spec(
      n, {neumann_filled(n, {{1, 8}, {3, 10}, {5, 12}, {7, 14}}),
          neumann_filled(n, {{1, 6}, {2, 13}, {3, 11}, {4, 12}, {5, 10}, {9, 14}}),
          neumann_filled(n, {{1, 12}, {2, 9}, {3, 5}, {4, 15}, {7, 10}, {8, 14}})});
  return p;
}

D4Data catalog_d4() {
  D4Data d;
  std::vector<std::size_t> fix{0, 1}, swap{1, 0};
  std::vector<int> tau{-1, 1}, plus{1, 1};
  d.generators = {SignedPerm::from_images(fix, tau), SignedPerm::from_images(swap, plus)};
  // H = {e, tau, tau sigma^2, sigma^2}, Hhat = {e, tau sigma, tau sigma^3, sigma^2}.
  d.h_words = {{}, {0}, {1, 0, 1}, {0, 1, 0, 1}};
  d.h_values = {1, -1, 1, -1};
  d.h_hat_words = {{}, {0, 1, 0}, {1}, {0, 1, 0, 1}};
  d.h_hat_values = {1, 1, -1, -1};
  return d;
}

std::vector<std::string> catalog_names() { return {"gww", "square-triangle", "band15", "d4-group"}; }

}  // namespace isospec
