#include "isospec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace isospec {

LoopSignedGraph::LoopSignedGraph(std::size_t vertices, std::vector<SignedPerm> adjacency)
    : vertices_(vertices), adjacency_(std::move(adjacency)) {
  for (const auto& a : adjacency_)
    if (a.size() != vertices_)
      throw std::invalid_argument("adjacency size does not match vertex count");
}

LoopSignedGraph LoopSignedGraph::from_spec(std::size_t vertices,
                                           const std::vector<ColourSpec>& colours) {
  std::vector<SignedPerm> adj;
  adj.reserve(colours.size());
  for (const auto& spec : colours) {
    std::vector<std::int32_t> packed(vertices, 0);
    auto put = [&](std::size_t row, std::int32_t value) {
      if (row == 0 || row > vertices) throw std::invalid_argument("vertex out of range");
      // A second incidence makes the row invalid rather than silently overwriting.
      packed[row - 1] = packed[row - 1] == 0 ? value : std::int32_t{0x7fffffff};
    };
    for (auto [u, v] : spec.edges) {
      put(u, static_cast<std::int32_t>(v));
      put(v, static_cast<std::int32_t>(u));
    }
    for (auto [v, s] : spec.loops)
      put(v, s == LoopSign::Dirichlet ? -static_cast<std::int32_t>(v) : static_cast<std::int32_t>(v));
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  LoopSignedGraph g;
  g.vertices_ = vertices;
  g.adjacency_ = std::move(adj);
  return g;
}

bool LoopSignedGraph::has_dirichlet_loop() const {
  for (const auto& a : adjacency_)
    for (std::size_t v = 0; v < vertices_; ++v)
      if (a.target(v) == v && a.sign(v) < 0) return true;
  return false;
}

bool LoopSignedGraph::has_neumann_loop() const {
  for (const auto& a : adjacency_)
    for (std::size_t v = 0; v < vertices_; ++v)
      if (a.target(v) == v && a.sign(v) > 0) return true;
  return false;
}

ValidationResult validate(const LoopSignedGraph& g) {
  auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
  const std::size_t n = g.vertices();
  for (std::size_t c = 0; c < g.colors(); ++c) {
    const SignedPerm& a = g.adjacency(c);
    const auto& packed = a.packed();
    std::string where = "colour " + std::to_string(c + 1);
    if (a.size() != n) return fail(where + ": size " + std::to_string(a.size()) + " != " + std::to_string(n));
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (packed[i] == 0)
        return fail(where + ": vertex " + std::to_string(i + 1) + " has no incidence");
      std::size_t t = a.target(i);
      if (t >= n)
        return fail(where + ": vertex " + std::to_string(i + 1) + " has more than one incidence or a target out of range");
      if (hit[t])
        return fail(where + ": not a permutation, vertex " + std::to_string(t + 1) + " is hit twice");
      hit[t] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t t = a.target(i);
      if (t == i) continue;
      if (a.sign(i) < 0)
        return fail(where + ": negative off-diagonal entry at (" + std::to_string(i + 1) + "," +
                    std::to_string(t + 1) + ")");
      if (a.target(t) != i)
        return fail(where + ": not symmetric at (" + std::to_string(i + 1) + "," +
                    std::to_string(t + 1) + ")");
    }
  }
  return {};
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<std::vector<std::size_t>> components(const LoopSignedGraph& g) {
  const std::size_t n = g.vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t c = 0; c < g.colors(); ++c)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t a = find_root(parent, v), b = find_root(parent, g.partner(c, v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> index(n, SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find_root(parent, v);
    if (index[r] == SIZE_MAX) {
      index[r] = out.size();
      out.emplace_back();
    }
    out[index[r]].push_back(v);
  }
  return out;
}

bool is_connected(const LoopSignedGraph& g) { return components(g).size() <= 1; }

EdgeColouredGraph loopless_version(const LoopSignedGraph& g) {
  EdgeColouredGraph e;
  e.vertices = g.vertices();
  e.colors = g.colors();
  for (std::size_t c = 0; c < g.colors(); ++c)
    for (std::size_t v = 0; v < g.vertices(); ++v) {
      std::size_t w = g.partner(c, v);
      if (v < w) e.edges.push_back({v, w, c});
    }
  return e;
}

std::size_t edge_count(const LoopSignedGraph& g) {
  std::size_t count = 0;
  for (std::size_t c = 0; c < g.colors(); ++c)
    for (std::size_t v = 0; v < g.vertices(); ++v)
      if (v < g.partner(c, v)) ++count;
  return count;
}

bool is_treelike(const LoopSignedGraph& g) {
  return g.vertices() >= 1 && is_connected(g) && edge_count(g) + 1 == g.vertices();
}

bool is_bipartite_loopless(const LoopSignedGraph& g) {
  const std::size_t n = g.vertices();
  std::vector<int> side(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s]) continue;
    side[s] = 1;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::size_t v = queue[h];
      for (std::size_t c = 0; c < g.colors(); ++c) {
        std::size_t w = g.partner(c, v);
        if (w == v) continue;
        if (!side[w]) {
          side[w] = -side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// BFS code of the component of `start`.  When `bound` is given the walk stops
// as soon as the code is known to be larger; returns true iff the result is
// strictly smaller than bound (or bound is null).
bool bfs_code(const LoopSignedGraph& g, std::size_t start, std::vector<std::uint32_t>& code,
              std::vector<std::size_t>& order, std::vector<std::uint32_t>& label,
              const std::vector<std::uint32_t>* bound) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  code.clear();
  order.assign(1, start);
  label[start] = 0;
  bool smaller = bound == nullptr;
  bool result = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    std::size_t v = order[h];
    for (std::size_t c = 0; c < g.colors(); ++c) {
      std::size_t w = g.partner(c, v);
      std::uint32_t sym;
      if (w == v) {
        sym = g.loop_sign(c, v) < 0 ? 0 : 1;
      } else {
        if (label[w] == kUnset) {
          label[w] = static_cast<std::uint32_t>(order.size());
          order.push_back(w);
        }
        sym = 2 + label[w];
      }
      if (!smaller) {
        std::uint32_t b = (*bound)[code.size()];
        if (sym < b) {
          smaller = true;
        } else if (sym > b) {
          result = false;
          goto done;
        }
      }
      code.push_back(sym);
    }
  }
  result = smaller;
done:
  for (std::size_t v : order) label[v] = kUnset;
  return result;
}

}  // namespace

CanonicalCode canonical_form(const LoopSignedGraph& g) {
  const std::size_t n = g.vertices();
  struct Part {
    std::vector<std::uint32_t> code;
    std::vector<std::size_t> order;
  };
  std::vector<Part> parts;
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::vector<std::uint32_t> code;
  std::vector<std::size_t> order;
  for (const auto& comp : components(g)) {
    Part best;
    bfs_code(g, comp.front(), best.code, best.order, label, nullptr);
    for (std::size_t k = 1; k < comp.size(); ++k)
      if (bfs_code(g, comp[k], code, order, label, &best.code)) {
        best.code.swap(code);
        best.order.swap(order);
      }
    parts.push_back(std::move(best));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
    return a.code < b.code;
  });
  CanonicalCode out;
  out.relabeling.assign(n, 0);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    out.code.push_back(static_cast<std::uint32_t>(p.order.size()));
    out.code.insert(out.code.end(), p.code.begin(), p.code.end());
    for (std::size_t k = 0; k < p.order.size(); ++k) out.relabeling[p.order[k]] = offset + k;
    offset += p.order.size();
  }
  return out;
}

LoopSignedGraph permute(const LoopSignedGraph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.vertices();
  if (perm.size() != n) throw std::invalid_argument("permute: length mismatch");
  std::vector<SignedPerm> adj;
  for (const auto& a : g.adjacency()) {
    std::vector<std::int32_t> packed(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto t = static_cast<std::int32_t>(perm[a.target(v)] + 1);
      packed[perm[v]] = a.sign(v) < 0 ? -t : t;
    }
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(n, std::move(adj));
}

std::optional<std::vector<std::size_t>> is_isomorphic(const LoopSignedGraph& g1,
                                                      const LoopSignedGraph& g2) {
  if (g1.vertices() != g2.vertices() || g1.colors() != g2.colors()) return std::nullopt;
  CanonicalCode a = canonical_form(g1), b = canonical_form(g2);
  if (a.code != b.code) return std::nullopt;
  std::vector<std::size_t> from_label(g2.vertices());
  for (std::size_t v = 0; v < g2.vertices(); ++v) from_label[b.relabeling[v]] = v;
  std::vector<std::size_t> perm(g1.vertices());
  for (std::size_t v = 0; v < g1.vertices(); ++v) perm[v] = from_label[a.relabeling[v]];
  return perm;
}

LoopSignedGraph double_cover(const LoopSignedGraph& g) {
  const std::size_t n = g.vertices();
  std::vector<SignedPerm> adj;
  for (const auto& a : g.adjacency()) {
    std::vector<std::int32_t> packed(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t t = a.target(v);
      if (t != v) {
        packed[v] = static_cast<std::int32_t>(t + 1);
        packed[v + n] = static_cast<std::int32_t>(t + n + 1);
      } else if (a.sign(v) < 0) {
        packed[v] = static_cast<std::int32_t>(v + n + 1);
        packed[v + n] = static_cast<std::int32_t>(v + 1);
      } else {
        packed[v] = static_cast<std::int32_t>(v + 1);
        packed[v + n] = static_cast<std::int32_t>(v + n + 1);
      }
    }
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(2 * n, std::move(adj));
}

LoopSignedGraph induced_subgraph(const LoopSignedGraph& g, const std::vector<std::size_t>& verts) {
  std::vector<std::size_t> index(g.vertices(), SIZE_MAX);
  for (std::size_t k = 0; k < verts.size(); ++k) index[verts[k]] = k;
  std::vector<SignedPerm> adj;
  for (const auto& a : g.adjacency()) {
    std::vector<std::int32_t> packed(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k) {
      std::size_t t = index[a.target(verts[k])];
      if (t == SIZE_MAX) throw std::invalid_argument("induced_subgraph: vertex set not closed");
      auto e = static_cast<std::int32_t>(t + 1);
      packed[k] = a.sign(verts[k]) < 0 ? -e : e;
    }
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(verts.size(), std::move(adj));
}

LoopSignedGraph disjoint_union(const LoopSignedGraph& a, const LoopSignedGraph& b) {
  if (a.colors() != b.colors()) throw std::invalid_argument("disjoint_union: colour count mismatch");
  std::vector<SignedPerm> adj;
  const std::size_t n = a.vertices();
  for (std::size_t c = 0; c < a.colors(); ++c) {
    std::vector<std::int32_t> packed = a.adjacency(c).packed();
    for (std::int32_t e : b.adjacency(c).packed())
      packed.push_back(e < 0 ? e - static_cast<std::int32_t>(n) : e + static_cast<std::int32_t>(n));
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(n + b.vertices(), std::move(adj));
}

}  // namespace isospec
