#ifndef ISOSPEC_TRANSFORM_HPP_
#define ISOSPEC_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isospec/algebra.hpp"
#include "isospec/graph.hpp"
#include "isospec/transplant.hpp"

namespace isospec {

// A transformed graph together with the diagonal conjugator P = diag(signs)
// that produced it.
struct SignedResult {
  LoopSignedGraph graph;
  std::vector<int> signs;
};

// A^c -> -P A^c P for c in S, P A^c P otherwise.  nullopt when no P exists.
std::optional<SignedResult> swap_loop_signs(const LoopSignedGraph& g, const std::vector<std::size_t>& colours);
std::optional<SignedResult> dualize(const LoopSignedGraph& g);

// A^c -> A^c' A^c A^c', then all colours conjugated by a diagonal P that makes
// every off-diagonal entry positive.  nullopt when no such P exists.
std::optional<SignedResult> braid(const LoopSignedGraph& g, std::size_t c, std::size_t c_prime);

// Phat * T * P.
RatMatrix transport_witness(const RatMatrix& t, const std::vector<int>& signs1,
                            const std::vector<int>& signs2);

LoopSignedGraph copy_colour(const LoopSignedGraph& g, std::size_t c);
LoopSignedGraph add_identity_colour(const LoopSignedGraph& g, LoopSign sign);
LoopSignedGraph omit_colour(const LoopSignedGraph& g, std::size_t c);

// Deletes component k of g1 and component l of g2 if those components are
// transplantable to each other; nullopt otherwise.
std::optional<std::pair<LoopSignedGraph, LoopSignedGraph>> remove_component(
    const LoopSignedGraph& g1, const LoopSignedGraph& g2, std::size_t k, std::size_t l,
    const DecideOptions& opts = {});

// Colour [c1, c2] is c1 + c2 * C1 (0-based); vertex (i, k) is i * V2 + k.
// Throws std::invalid_argument if either graph has a Dirichlet loop.
LoopSignedGraph cross(const LoopSignedGraph& g1, const LoopSignedGraph& g2);

struct SubstitutionPlan {
  LoopSignedGraph host;
  LoopSignedGraph substituent;
  // assignment[chi][c]: substituent vertices routed to host colour c in
  // substituent colour chi (0-based).
  std::vector<std::vector<std::vector<std::size_t>>> assignment;
};

// Throws std::invalid_argument when the plan violates its invariants.
void check_plan(const SubstitutionPlan& plan);
// A^chi = S_*^chi (x) I_V + sum_c sum_{i in I_c^chi} E_ii (x) A^c; vertex
// (p, q) is p * V + q with p a substituent vertex.
LoopSignedGraph substitute(const SubstitutionPlan& plan);

}  // namespace isospec

#endif  // ISOSPEC_TRANSFORM_HPP_
