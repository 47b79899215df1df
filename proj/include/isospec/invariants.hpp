#ifndef ISOSPEC_INVARIANTS_HPP_
#define ISOSPEC_INVARIANTS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isospec/graph.hpp"

namespace isospec {

// Colour sequence c1..cl (0-based colours).  Its matrix is A^{cl}...A^{c1}.
using Word = std::vector<std::size_t>;

std::int64_t word_trace(const LoopSignedGraph& g, const Word& word);

// Lexicographically least rotation of each word of length <= max_len.
std::vector<Word> necklaces(std::size_t colors, std::size_t max_len);
// Necklaces with no two cyclically adjacent equal letters.  Every word trace
// equals the trace of one of these (or of the empty word).
std::vector<Word> reduced_necklaces(std::size_t colors, std::size_t max_len);

std::map<Word, std::int64_t> trace_profile(const LoopSignedGraph& g, std::size_t max_len);

inline constexpr std::uint64_t kProbePrime = (std::uint64_t{1} << 61) - 1;

// Tr(M^k), k = 1..power, with M = sum_c A^c (x) Z^c and seeded random
// dim x dim matrices Z^c over GF(2^61 - 1).
std::vector<std::uint64_t> kron_probe(const LoopSignedGraph& g, std::size_t dim,
                                      std::size_t power, std::uint64_t seed);

// det(sum_c z_c A^c) over GF(2^61 - 1) for seeded random z.
std::uint64_t det_probe(const LoopSignedGraph& g, std::uint64_t seed);

struct Fingerprint {
  std::vector<std::int64_t> word_traces;  // over reduced_necklaces(C, L)
  std::vector<std::uint64_t> probe;
  std::uint64_t det = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintParams {
  std::size_t max_len = 6;
  std::size_t kron_dim = 3;
  std::size_t kron_power = 0;  // 0 means 2V
  std::uint64_t seed = 1;
};

Fingerprint fingerprint(const LoopSignedGraph& g, const FingerprintParams& params = {});

struct CornerTraces {
  std::size_t c1;
  std::size_t c2;
  std::int64_t t2;  // Tr(A^c1 A^c2)
  std::int64_t t4;  // Tr(A^c1 A^c2 A^c1 A^c2)
};

struct SpectralReport {
  std::size_t block_count = 0;
  std::vector<std::int64_t> boundary_balance;
  std::vector<CornerTraces> corner_traces;  // ordered pairs c1 != c2
  std::optional<std::size_t> loopless_edges;  // homogeneous loop signs only
};

SpectralReport spectral_report(const LoopSignedGraph& g);

// E = 1/2 sum_c (V +- Tr A^c).  Throws std::invalid_argument on mixed signs.
std::size_t loopless_edges_from_traces(const LoopSignedGraph& g);

}  // namespace isospec

#endif  // ISOSPEC_INVARIANTS_HPP_
