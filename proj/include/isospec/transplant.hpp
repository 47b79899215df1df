#ifndef ISOSPEC_TRANSPLANT_HPP_
#define ISOSPEC_TRANSPLANT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isospec/algebra.hpp"
#include "isospec/graph.hpp"
#include "isospec/invariants.hpp"

namespace isospec {

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

enum class Method { Auto, Group, Orbit };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

// A word whose traces differ on the two graphs.  inconsistent_words holds the
// two closure words with equal images in one graph and different images in
// the other, when the certificate came from such a collision.
struct Certificate {
  Word word;
  std::int64_t trace1 = 0;
  std::int64_t trace2 = 0;
  std::optional<std::pair<Word, Word>> inconsistent_words;
};

struct Decision {
  bool yes = false;
  std::optional<RatMatrix> witness;
  Method method = Method::Group;
  std::optional<Certificate> certificate;
  std::optional<std::size_t> group_order;
};

// Closure words are read left to right: word (c1, ..., ck) is the element
// A^c1 A^c2 ... A^ck.
struct PairClosure {
  enum class Status { Ok, Inconsistent, CapExceeded };
  Status status = Status::Ok;
  std::vector<std::pair<SignedPerm, SignedPerm>> elements;
  std::vector<Word> words;
  // Set when status is Inconsistent.
  std::optional<std::pair<Word, Word>> collision;
};

PairClosure pair_closure(const LoopSignedGraph& g1, const LoopSignedGraph& g2,
                         std::size_t cap = kDefaultClosureCap);

struct DecideOptions {
  Method method = Method::Auto;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultClosureCap;
  bool want_witness = true;
  std::size_t witness_retries = 32;
};

// Throws std::invalid_argument when the colour counts differ and
// std::runtime_error when the group route exceeds the cap with no fallback.
Decision decide(const LoopSignedGraph& g1, const LoopSignedGraph& g2, const DecideOptions& opts = {});

// Orbits of the entries of T under T -> Ahat^c T A^c.  Entries in an orbit are
// equal up to a propagated sign; an orbit reached with both signs is zero.
struct IntertwinerOrbits {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<std::int32_t> orbit;  // per entry i*n+j, -1 when forced to zero
  std::vector<std::int8_t> sign;
};

IntertwinerOrbits intertwiner_orbits(const LoopSignedGraph& g1, const LoopSignedGraph& g2);
std::vector<RatMatrix> basis_matrices(const IntertwinerOrbits& orbits);
// Basis of {T : Ahat^c T = T A^c for all c}, entries in {0, +-1}.
std::vector<RatMatrix> intertwiner_space(const LoopSignedGraph& g1, const LoopSignedGraph& g2);

// Random evaluation over GF(2^61 - 1): true means the space certainly holds
// an invertible element; false is wrong with probability at most
// trials * n / 2^61.
bool space_has_invertible(const IntertwinerOrbits& orbits, std::uint64_t seed, std::size_t trials = 2);

std::optional<RatMatrix> find_invertible(const IntertwinerOrbits& orbits, std::uint64_t seed,
                                         std::size_t retries = 32);

// Throws std::invalid_argument when T is not V x V.
bool verify_witness(const LoopSignedGraph& g1, const LoopSignedGraph& g2, const RatMatrix& t);

std::vector<std::vector<bool>> pairwise_check(const std::vector<LoopSignedGraph>& graphs,
                                              const DecideOptions& opts = {});

}  // namespace isospec

#endif  // ISOSPEC_TRANSPLANT_HPP_
