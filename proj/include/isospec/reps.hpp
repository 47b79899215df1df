#ifndef ISOSPEC_REPS_HPP_
#define ISOSPEC_REPS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "isospec/algebra.hpp"
#include "isospec/graph.hpp"
#include "isospec/invariants.hpp"

namespace isospec {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotBipartite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group words are read left to right: (c1, ..., ck) is gamma_c1 ... gamma_ck.
SignedPerm evaluate_word(const std::vector<SignedPerm>& generators, const Word& word);

struct GroupClosure {
  std::vector<SignedPerm> generators;
  std::vector<SignedPerm> elements;  // elements[0] is the identity
  std::vector<Word> words;
  std::unordered_map<SignedPerm, std::size_t, SignedPermHash> index;

  std::size_t order() const { return elements.size(); }
  // SIZE_MAX when absent.
  std::size_t index_of(const SignedPerm& p) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t invert(std::size_t a) const;
};

// Throws CapExceeded when the group has more than cap elements.
GroupClosure closure(const std::vector<SignedPerm>& generators, std::size_t cap = 2'000'000);

// Subgroup H (element indices, ascending) with a +-1 character R.
struct SubCharPair {
  std::vector<std::size_t> subgroup;
  std::vector<int> character;  // parallel to subgroup
  int value(std::size_t element) const;  // 0 when not in H
};

// Closes the listed elements under multiplication and extends the values
// multiplicatively.  Throws std::invalid_argument when the values do not
// define a homomorphism to {+-1}.
SubCharPair subgroup_from_words(const GroupClosure& group, const std::vector<Word>& words,
                                const std::vector<int>& values);

// Colour c joins g and g * gamma_c.  Throws std::invalid_argument unless each
// generator is an involution other than the identity.
LoopSignedGraph cayley_graph(const GroupClosure& group);

// Right cosets Hg, numbered in breadth-first order from H.  Throws
// NotBipartite when no representative system makes all edges positive.
LoopSignedGraph schreier_graph(const GroupClosure& group, const SubCharPair& pair);

// One pair per component, taken at its smallest vertex.  The group must be
// the closure of g's adjacency matrices.
std::vector<SubCharPair> associated_pairs(const GroupClosure& group, const LoopSignedGraph& g);

struct ConjugacyClasses {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

ConjugacyClasses conjugacy_classes(const GroupClosure& group);

// Value of the induced character on each conjugacy class.
std::vector<std::int64_t> induced_character(const GroupClosure& group, const ConjugacyClasses& cc,
                                            const SubCharPair& pair);
std::vector<std::int64_t> induced_character(const GroupClosure& group, const SubCharPair& pair);

bool characters_equal(const GroupClosure& group, const std::vector<SubCharPair>& pairs1,
                      const std::vector<SubCharPair>& pairs2);

// |[g] n H| == |[g] n Hhat| for every class.  Throws std::invalid_argument
// unless both sets are subgroups.
bool gassmann_check(const GroupClosure& group, const std::vector<std::size_t>& h,
                    const std::vector<std::size_t>& h_hat);

}  // namespace isospec

#endif  // ISOSPEC_REPS_HPP_
