#ifndef ISOSPEC_GRAPH_HPP_
#define ISOSPEC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isospec/algebra.hpp"

namespace isospec {

enum class LoopSign : int { Dirichlet = -1, Neumann = 1 };

// One colour of a graph given as edges and loops, 1-based vertices.
struct ColourSpec {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<std::size_t, LoopSign>> loops;
};

// V vertices, C colours, one symmetric signed involution per colour.  Colours
// are 0-based in the API and 1-based in every file format.
class LoopSignedGraph {
 public:
  LoopSignedGraph() = default;
  LoopSignedGraph(std::size_t vertices, std::vector<SignedPerm> adjacency);

  // Unchecked; a vertex missing from a colour leaves an invalid entry that
  // validate() reports.
  static LoopSignedGraph from_spec(std::size_t vertices, const std::vector<ColourSpec>& colours);

  std::size_t vertices() const { return vertices_; }
  std::size_t colors() const { return adjacency_.size(); }
  const SignedPerm& adjacency(std::size_t c) const { return adjacency_[c]; }
  const std::vector<SignedPerm>& adjacency() const { return adjacency_; }

  std::size_t partner(std::size_t c, std::size_t v) const { return adjacency_[c].target(v); }
  bool is_loop(std::size_t c, std::size_t v) const { return partner(c, v) == v; }
  // -1 for a Dirichlet loop, +1 for a Neumann loop; undefined on edges.
  int loop_sign(std::size_t c, std::size_t v) const { return adjacency_[c].sign(v); }

  bool has_dirichlet_loop() const;
  bool has_neumann_loop() const;

  friend bool operator==(const LoopSignedGraph&, const LoopSignedGraph&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<SignedPerm> adjacency_;
};

struct ValidationResult {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

ValidationResult validate(const LoopSignedGraph& g);

// Components of the loopless version, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> components(const LoopSignedGraph& g);
bool is_connected(const LoopSignedGraph& g);

struct ColouredEdge {
  std::size_t u;
  std::size_t v;
  std::size_t colour;
  friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
};

struct EdgeColouredGraph {
  std::size_t vertices = 0;
  std::size_t colors = 0;
  std::vector<ColouredEdge> edges;  // u < v, sorted by (colour, u)
};

EdgeColouredGraph loopless_version(const LoopSignedGraph& g);
std::size_t edge_count(const LoopSignedGraph& g);
bool is_treelike(const LoopSignedGraph& g);
bool is_bipartite_loopless(const LoopSignedGraph& g);

// Code symbols per slot: 0 Dirichlet loop, 1 Neumann loop, 2 + label for an
// edge to the vertex with that discovery label.  Slots are vertex-major
// (discovery order, then colour).  Components are prefixed by their size and
// ordered by (size, code).
struct CanonicalCode {
  std::vector<std::uint32_t> code;
  // relabeling[v] is the canonical label of vertex v.
  std::vector<std::size_t> relabeling;
};

CanonicalCode canonical_form(const LoopSignedGraph& g);

// Vertex v of g becomes vertex perm[v].
LoopSignedGraph permute(const LoopSignedGraph& g, const std::vector<std::size_t>& perm);

// perm with permute(g1, perm) == g2, if any.
std::optional<std::vector<std::size_t>> is_isomorphic(const LoopSignedGraph& g1,
                                                      const LoopSignedGraph& g2);

// Vertices 0..V-1 are the positive copy, V..2V-1 the negative copy.  Edges
// are doubled, a Dirichlet loop at i becomes an edge between the copies of i,
// Neumann loops stay on both copies.
LoopSignedGraph double_cover(const LoopSignedGraph& g);

// Graph on the given vertices of g (in the given order).
LoopSignedGraph induced_subgraph(const LoopSignedGraph& g, const std::vector<std::size_t>& verts);
LoopSignedGraph disjoint_union(const LoopSignedGraph& a, const LoopSignedGraph& b);

}  // namespace isospec

#endif  // ISOSPEC_GRAPH_HPP_
