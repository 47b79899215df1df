#include "isospec/invariants.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "modp.hpp"

namespace isospec {

std::int64_t word_trace(const LoopSignedGraph& g, const Word& word) {
  for (std::size_t c : word)
    if (c >= g.colors()) throw std::out_of_range("word_trace: colour out of range");
  std::int64_t total = 0;
  for (std::size_t v = 0; v < g.vertices(); ++v) {
    std::size_t x = v;
    int s = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const SignedPerm& a = g.adjacency(*it);
      s *= a.sign(x);
      x = a.target(x);
    }
    if (x == v) total += s;
  }
  return total;
}

namespace {

bool is_least_rotation(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t a = w[(k + r) % n], b = w[k];
      if (a < b) return false;
      if (a > b) break;
    }
  return true;
}

void collect(std::size_t colors, std::size_t len, bool reduced, Word& w, std::vector<Word>& out) {
  if (w.size() == len) {
    if (reduced && len > 1 && w.front() == w.back()) return;
    if (is_least_rotation(w)) out.push_back(w);
    return;
  }
  for (std::size_t c = 0; c < colors; ++c) {
    if (reduced && !w.empty() && w.back() == c) continue;
    w.push_back(c);
    collect(colors, len, reduced, w, out);
    w.pop_back();
  }
}

std::vector<Word> necklace_list(std::size_t colors, std::size_t max_len, bool reduced) {
  std::vector<Word> out{Word{}};
  Word w;
  for (std::size_t len = 1; len <= max_len; ++len) collect(colors, len, reduced, w, out);
  return out;
}

}  // namespace

std::vector<Word> necklaces(std::size_t colors, std::size_t max_len) {
  return necklace_list(colors, max_len, false);
}

std::vector<Word> reduced_necklaces(std::size_t colors, std::size_t max_len) {
  return necklace_list(colors, max_len, true);
}

std::map<Word, std::int64_t> trace_profile(const LoopSignedGraph& g, std::size_t max_len) {
  std::map<Word, std::int64_t> out;
  for (const Word& w : necklaces(g.colors(), max_len)) out.emplace(w, word_trace(g, w));
  return out;
}

std::vector<std::uint64_t> kron_probe(const LoopSignedGraph& g, std::size_t dim,
                                      std::size_t power, std::uint64_t seed) {
  if (dim == 0 || power == 0) throw std::invalid_argument("kron_probe: dim and power must be positive");
  const std::size_t n = g.vertices();
  const std::size_t C = g.colors();
  const std::size_t N = n * dim;
  std::mt19937_64 rng(seed ^ 0x6b726f6e70726f62ULL);
  std::uniform_int_distribution<std::uint64_t> pick(0, modp::P - 1);
  std::vector<std::vector<std::uint64_t>> z(C, std::vector<std::uint64_t>(dim * dim));
  for (auto& m : z)
    for (auto& x : m) x = pick(rng);

  // X <- M * X, block row v of M holds +-Z^c in block column target_c(v).
  std::vector<std::uint64_t> x(N * N, 0), y(N * N);
  for (std::size_t i = 0; i < N; ++i) x[i * N + i] = 1;
  std::vector<std::uint64_t> out;
  out.reserve(power);
  for (std::size_t k = 0; k < power; ++k) {
    std::fill(y.begin(), y.end(), 0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t c = 0; c < C; ++c) {
        const std::size_t t = g.partner(c, v);
        const bool negative = g.adjacency(c).sign(v) < 0;
        for (std::size_t a = 0; a < dim; ++a) {
          std::uint64_t* yrow = &y[(v * dim + a) * N];
          for (std::size_t b = 0; b < dim; ++b) {
            std::uint64_t f = z[c][a * dim + b];
            if (negative) f = modp::neg(f);
            if (f == 0) continue;
            const std::uint64_t* xrow = &x[(t * dim + b) * N];
            for (std::size_t col = 0; col < N; ++col)
              yrow[col] = modp::add(yrow[col], modp::mul(f, xrow[col]));
          }
        }
      }
    x.swap(y);
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < N; ++i) tr = modp::add(tr, x[i * N + i]);
    out.push_back(tr);
  }
  return out;
}

std::uint64_t det_probe(const LoopSignedGraph& g, std::uint64_t seed) {
  const std::size_t n = g.vertices();
  std::mt19937_64 rng(seed ^ 0x64657470726f6265ULL);
  std::uniform_int_distribution<std::uint64_t> pick(0, modp::P - 1);
  std::vector<std::uint64_t> zc(g.colors());
  for (auto& v : zc) v = pick(rng);
  std::vector<std::uint64_t> m(n * n, 0);
  for (std::size_t c = 0; c < g.colors(); ++c)
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t& e = m[v * n + g.partner(c, v)];
      e = g.adjacency(c).sign(v) < 0 ? modp::sub(e, zc[c]) : modp::add(e, zc[c]);
    }
  std::uint64_t det = 0;
  modp::eliminate(m, n, n, &det);
  return det;
}

Fingerprint fingerprint(const LoopSignedGraph& g, const FingerprintParams& params) {
  Fingerprint f;
  for (const Word& w : reduced_necklaces(g.colors(), params.max_len))
    f.word_traces.push_back(word_trace(g, w));
  std::size_t power = params.kron_power ? params.kron_power : 2 * g.vertices();
  if (params.kron_dim > 0 && power > 0 && g.vertices() > 0)
    f.probe = kron_probe(g, params.kron_dim, power, params.seed);
  f.det = det_probe(g, params.seed);
  return f;
}

SpectralReport spectral_report(const LoopSignedGraph& g) {
  SpectralReport r;
  r.block_count = g.vertices();
  for (std::size_t c = 0; c < g.colors(); ++c) r.boundary_balance.push_back(trace(g.adjacency(c)));
  for (std::size_t a = 0; a < g.colors(); ++a)
    for (std::size_t b = 0; b < g.colors(); ++b) {
      if (a == b) continue;
      r.corner_traces.push_back({a, b, word_trace(g, {a, b}), word_trace(g, {a, b, a, b})});
    }
  if (!(g.has_dirichlet_loop() && g.has_neumann_loop())) r.loopless_edges = loopless_edges_from_traces(g);
  return r;
}

std::size_t loopless_edges_from_traces(const LoopSignedGraph& g) {
  const bool dirichlet = g.has_dirichlet_loop();
  if (dirichlet && g.has_neumann_loop())
    throw std::invalid_argument("loopless edge count needs homogeneous loop signs");
  std::int64_t twice = 0;
  for (std::size_t c = 0; c < g.colors(); ++c) {
    std::int64_t t = trace(g.adjacency(c));
    twice += static_cast<std::int64_t>(g.vertices()) + (dirichlet ? t : -t);
  }
  return static_cast<std::size_t>(twice / 2);
}

}  // namespace isospec
