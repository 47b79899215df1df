#ifndef ISOSPEC_CATALOG_HPP_
#define ISOSPEC_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "isospec/algebra.hpp"
#include "isospec/graph.hpp"
#include "isospec/invariants.hpp"

namespace isospec {

struct CatalogPair {
  LoopSignedGraph first;
  LoopSignedGraph second;
  std::optional<RatMatrix> witness;  // second.A^c * T == T * first.A^c
};

// Seven triangles, colours straight / zigzag / wavy.
CatalogPair catalog_gww();
// Two vertices, colours straight / zigzag.
CatalogPair catalog_square_triangle();
// Fifteen vertices, Neumann loops only, colours straight / wavy / zigzag.
// The first graph is bipartite, the second is not.
CatalogPair catalog_band15();

// Dihedral group of order 8 on two points with generators diag(-1,1) and
// the swap, plus two subgroup/character pairs as generator words.
struct D4Data {
  std::vector<SignedPerm> generators;
  std::vector<Word> h_words;
  std::vector<int> h_values;
  std::vector<Word> h_hat_words;
  std::vector<int> h_hat_values;
};

D4Data catalog_d4();

std::vector<std::string> catalog_names();

}  // namespace isospec

#endif  // ISOSPEC_CATALOG_HPP_
