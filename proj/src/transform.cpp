#include "isospec/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace isospec {

namespace {

// Two-colours the vertices so that P_i P_j = want(c, i) on every c-edge
// (i, j); the smallest vertex of each component is +1.
template <typename Want>
std::optional<std::vector<int>> solve_signs(const std::vector<SignedPerm>& adj, std::size_t n, Want want) {
  std::vector<int> p(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (p[s]) continue;
    p[s] = 1;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::size_t v = queue[h];
      for (std::size_t c = 0; c < adj.size(); ++c) {
        std::size_t w = adj[c].target(v);
        if (w == v) continue;
        int need = p[v] * want(c, v);
        if (!p[w]) {
          p[w] = need;
          queue.push_back(w);
        } else if (p[w] != need) {
          return std::nullopt;
        }
      }
    }
  }
  return p;
}

}  // namespace

std::optional<SignedResult> swap_loop_signs(const LoopSignedGraph& g, const std::vector<std::size_t>& colours) {
  std::vector<bool> in_s(g.colors(), false);
  for (std::size_t c : colours) {
    if (c >= g.colors()) throw std::out_of_range("swap_loop_signs: colour out of range");
    in_s[c] = true;
  }
  auto p = solve_signs(g.adjacency(), g.vertices(), [&](std::size_t c, std::size_t) { return in_s[c] ? -1 : 1; });
  if (!p) return std::nullopt;
  std::vector<SignedPerm> adj;
  for (std::size_t c = 0; c < g.colors(); ++c) {
    SignedPerm a = conjugate_by_diagonal(g.adjacency(c), *p);
    if (in_s[c]) {
      std::vector<std::int32_t> packed = a.packed();
      for (auto& e : packed) e = -e;
      a = SignedPerm::from_packed_unchecked(std::move(packed));
    }
    adj.push_back(std::move(a));
  }
  return SignedResult{LoopSignedGraph(g.vertices(), std::move(adj)), std::move(*p)};
}

std::optional<SignedResult> dualize(const LoopSignedGraph& g) {
  std::vector<std::size_t> all(g.colors());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return swap_loop_signs(g, all);
}

std::optional<SignedResult> braid(const LoopSignedGraph& g, std::size_t c, std::size_t c_prime) {
  if (c >= g.colors() || c_prime >= g.colors()) throw std::out_of_range("braid: colour out of range");
  std::vector<SignedPerm> adj = g.adjacency();
  const SignedPerm& b = g.adjacency(c_prime);
  adj[c] = compose(compose(b, g.adjacency(c)), b);
  auto p = solve_signs(adj, g.vertices(), [&](std::size_t col, std::size_t v) { return adj[col].sign(v); });
  if (!p) return std::nullopt;
  for (auto& a : adj) a = conjugate_by_diagonal(a, *p);
  return SignedResult{LoopSignedGraph(g.vertices(), std::move(adj)), std::move(*p)};
}

RatMatrix transport_witness(const RatMatrix& t, const std::vector<int>& signs1, const std::vector<int>& signs2) {
  if (t.rows() != signs2.size() || t.cols() != signs1.size())
    throw std::invalid_argument("transport_witness: dimension mismatch");
  RatMatrix out = t;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (signs2[i] * signs1[j] < 0) out(i, j) = -out(i, j);
  return out;
}

LoopSignedGraph copy_colour(const LoopSignedGraph& g, std::size_t c) {
  if (c >= g.colors()) throw std::out_of_range("copy_colour: colour out of range");
  std::vector<SignedPerm> adj = g.adjacency();
  adj.push_back(g.adjacency(c));
  return LoopSignedGraph(g.vertices(), std::move(adj));
}

LoopSignedGraph add_identity_colour(const LoopSignedGraph& g, LoopSign sign) {
  std::vector<SignedPerm> adj = g.adjacency();
  std::vector<std::size_t> targets(g.vertices());
  for (std::size_t v = 0; v < targets.size(); ++v) targets[v] = v;
  std::vector<int> signs(g.vertices(), static_cast<int>(sign));
  adj.push_back(SignedPerm::from_images(targets, signs));
  return LoopSignedGraph(g.vertices(), std::move(adj));
}

LoopSignedGraph omit_colour(const LoopSignedGraph& g, std::size_t c) {
  if (c >= g.colors()) throw std::out_of_range("omit_colour: colour out of range");
  if (g.colors() < 2) throw std::invalid_argument("omit_colour: cannot omit the only colour");
  std::vector<SignedPerm> adj = g.adjacency();
  adj.erase(adj.begin() + static_cast<std::ptrdiff_t>(c));
  return LoopSignedGraph(g.vertices(), std::move(adj));
}

std::optional<std::pair<LoopSignedGraph, LoopSignedGraph>> remove_component(
    const LoopSignedGraph& g1, const LoopSignedGraph& g2, std::size_t k, std::size_t l,
    const DecideOptions& opts) {
  auto comps1 = components(g1);
  auto comps2 = components(g2);
  if (k >= comps1.size() || l >= comps2.size())
    throw std::out_of_range("remove_component: component index out of range");
  DecideOptions o = opts;
  o.want_witness = false;
  LoopSignedGraph part1 = induced_subgraph(g1, comps1[k]);
  LoopSignedGraph part2 = induced_subgraph(g2, comps2[l]);
  if (!decide(part1, part2, o).yes) return std::nullopt;
  if (!decide(g1, g2, o).yes) return std::nullopt;
  auto rest = [](const LoopSignedGraph& g, const std::vector<std::vector<std::size_t>>& comps, std::size_t skip) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (i != skip) keep.insert(keep.end(), comps[i].begin(), comps[i].end());
    std::sort(keep.begin(), keep.end());
    return induced_subgraph(g, keep);
  };
  return std::make_pair(rest(g1, comps1, k), rest(g2, comps2, l));
}

LoopSignedGraph cross(const LoopSignedGraph& g1, const LoopSignedGraph& g2) {
  if (g1.has_dirichlet_loop() || g2.has_dirichlet_loop())
    throw std::invalid_argument("cross: inputs must not carry Dirichlet loops");
  std::vector<SignedPerm> adj;
  for (std::size_t c2 = 0; c2 < g2.colors(); ++c2)
    for (std::size_t c1 = 0; c1 < g1.colors(); ++c1)
      adj.push_back(kronecker(g1.adjacency(c1), g2.adjacency(c2)));
  return LoopSignedGraph(g1.vertices() * g2.vertices(), std::move(adj));
}

void check_plan(const SubstitutionPlan& plan) {
  const auto& s = plan.substituent;
  const auto& host = plan.host;
  if (plan.assignment.size() != s.colors())
    throw std::invalid_argument("substitution: one assignment per substituent colour required");
  for (std::size_t chi = 0; chi < s.colors(); ++chi) {
    if (plan.assignment[chi].size() > host.colors())
      throw std::invalid_argument("substitution: assignment names more host colours than exist");
    std::vector<bool> used(s.vertices(), false);
    for (const auto& verts : plan.assignment[chi])
      for (std::size_t i : verts) {
        if (i >= s.vertices()) throw std::invalid_argument("substitution: vertex out of range");
        if (!s.is_loop(chi, i) || s.loop_sign(chi, i) < 0)
          throw std::invalid_argument("substitution: vertex " + std::to_string(i + 1) +
                                      " has no Neumann loop in colour " + std::to_string(chi + 1));
        if (used[i])
          throw std::invalid_argument("substitution: vertex " + std::to_string(i + 1) +
                                      " assigned twice in colour " + std::to_string(chi + 1));
        used[i] = true;
      }
  }
}

LoopSignedGraph substitute(const SubstitutionPlan& plan) {
  check_plan(plan);
  const auto& s = plan.substituent;
  const auto& host = plan.host;
  const std::size_t v = host.vertices();
  std::vector<SignedPerm> adj;
  for (std::size_t chi = 0; chi < s.colors(); ++chi) {
    std::vector<std::int32_t> packed(s.vertices() * v);
    std::vector<std::int64_t> routed(s.vertices(), -1);
    for (std::size_t c = 0; c < plan.assignment[chi].size(); ++c)
      for (std::size_t i : plan.assignment[chi][c]) routed[i] = static_cast<std::int64_t>(c);
    const SignedPerm& sc = s.adjacency(chi);
    for (std::size_t p = 0; p < s.vertices(); ++p)
      for (std::size_t q = 0; q < v; ++q) {
        std::size_t row = p * v + q;
        std::int32_t e;
        if (routed[p] >= 0) {
          const SignedPerm& a = host.adjacency(static_cast<std::size_t>(routed[p]));
          e = static_cast<std::int32_t>(p * v + a.target(q) + 1);
          if (a.sign(q) < 0) e = -e;
        } else {
          e = static_cast<std::int32_t>(sc.target(p) * v + q + 1);
          if (sc.sign(p) < 0) e = -e;
        }
        packed[row] = e;
      }
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(s.vertices() * v, std::move(adj));
}

}  // namespace isospec
