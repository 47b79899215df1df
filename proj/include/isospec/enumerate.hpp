#ifndef ISOSPEC_ENUMERATE_HPP_
#define ISOSPEC_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isospec/graph.hpp"
#include "isospec/transplant.hpp"

namespace isospec {

// Mixed: every loop is D or N.  Dirichlet / Neumann: every loop carries that
// sign (the signless graphs are generated once).
enum class Regime { Mixed, Dirichlet, Neumann };

const char* to_string(Regime r);
Regime regime_from_string(const std::string& s);

struct EnumOptions {
  std::size_t vertices = 1;
  std::size_t colors = 3;
  Regime regime = Regime::Mixed;
  bool treelike_only = false;
  // Work split: nodes at `shard_depth` filled slots are dealt round robin.
  std::size_t shard_count = 1;
  std::size_t shard_index = 0;
  std::size_t shard_depth = 4;
  // Stop after this many classes (0: unlimited); EnumStats::truncated is set.
  std::size_t limit = 0;
};

struct EnumStats {
  std::size_t classes = 0;
  std::size_t treelike = 0;
  std::size_t search_nodes = 0;
  bool truncated = false;
};

// Emits one canonical representative per isomorphism class of connected
// graphs; each emitted graph is its own canonical form.
EnumStats enumerate_classes(const EnumOptions& opts, const std::function<void(const LoopSignedGraph&)>& emit);

struct ClassPair {
  LoopSignedGraph first;
  LoopSignedGraph second;
  bool treelike = false;  // both members treelike
};

struct CensusOptions {
  EnumOptions enumeration;
  bool quilts = false;
  // Enumeration shards run on this many threads; counts do not depend on it.
  std::size_t threads = 1;
  DecideOptions decide;
  std::uint64_t seed = 1;  // probe seed shared by all graphs
  std::size_t max_word = 6;
  std::size_t kron_dim = 3;
  // Decide every pair inside a word-trace bucket instead of clustering by
  // transplantability and splitting buckets with the probes.
  bool exhaustive_buckets = false;
  // Called for every decided pair with the verdict.
  std::function<void(const LoopSignedGraph&, const LoopSignedGraph&, bool)> on_decision;
};

struct CensusRow {
  std::size_t vertices = 0;
  std::size_t colors = 0;
  Regime regime = Regime::Mixed;
  bool treelike_only = false;
  std::size_t class_count = 0;
  std::size_t treelike_count = 0;
  std::size_t pair_count = 0;
  std::size_t treelike_pair_count = 0;
  std::size_t class_pair_count = 0;
  std::size_t treelike_class_pair_count = 0;
  std::optional<std::size_t> quilt_count;
  std::size_t decisions = 0;
  std::vector<ClassPair> pairs;
};

CensusRow census(const CensusOptions& opts);

// Unordered pairs of distinct transplantable classes among canonical graphs.
std::vector<ClassPair> find_pairs(const std::vector<LoopSignedGraph>& graphs, const CensusOptions& opts = {});

// Class index per pair under simultaneous colour permutation.
std::vector<std::size_t> colour_classes(const std::vector<ClassPair>& pairs);
// Class index per pair under colour permutation and normalizable braids.
std::vector<std::size_t> quilt_classes(const std::vector<ClassPair>& pairs);
std::size_t count_classes(const std::vector<std::size_t>& labels);

}  // namespace isospec

#endif  // ISOSPEC_ENUMERATE_HPP_
