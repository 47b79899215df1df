#include "isospec/transplant.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "modp.hpp"

namespace isospec {

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Group: return "group";
    case Method::Orbit: return "orbit";
  }
  return "auto";
}

Method method_from_string(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "group") return Method::Group;
  if (s == "orbit") return Method::Orbit;
  throw std::invalid_argument("unknown method '" + s + "'");
}

namespace {

// Signed permutations as byte strings of +-(target+1); short strings avoid
// allocation for small V.
using Key = std::string;

Key key_of(const SignedPerm& p) {
  Key k(p.size(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i) k[i] = static_cast<char>(p.packed()[i]);
  return k;
}

SignedPerm perm_of(const Key& k) {
  std::vector<std::int32_t> packed(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) packed[i] = static_cast<signed char>(k[i]);
  return SignedPerm::from_packed_unchecked(std::move(packed));
}

void times(const Key& a, const SignedPerm& gen, Key& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int e = static_cast<signed char>(a[i]);
    std::size_t t = static_cast<std::size_t>(e < 0 ? -e : e) - 1;
    int v = static_cast<int>(gen.target(t)) + 1;
    out[i] = static_cast<char>((e < 0) != (gen.sign(t) < 0) ? -v : v);
  }
}

std::int64_t key_trace(const Key& a) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int e = static_cast<signed char>(a[i]);
    if (e == static_cast<int>(i) + 1) ++t;
    if (e == -static_cast<int>(i) - 1) --t;
  }
  return t;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

struct GroupRun {
  PairClosure::Status status = PairClosure::Status::Ok;
  std::size_t order = 0;
  std::optional<Certificate> certificate;
  std::optional<std::pair<Word, Word>> collision;
};

// Breadth-first closure of (A^c, Ahat^c).  With check_traces the run stops at
// the first element whose two components have different traces.
GroupRun run_group(const LoopSignedGraph& g1, const LoopSignedGraph& g2, std::size_t cap,
                   bool check_traces, PairClosure* keep) {
  const std::size_t n = g1.vertices();
  if (n > 127) throw std::invalid_argument("pair_closure: more than 127 vertices");
  std::vector<Key> first, second;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> gen;
  std::unordered_map<Key, std::uint32_t> index1, index2;

  auto word_of = [&](std::uint32_t idx) {
    Word w;
    while (idx != 0) {
      w.push_back(gen[idx]);
      idx = parent[idx];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  Key id = key_of(SignedPerm::identity(n));
  first.push_back(id);
  second.push_back(id);
  parent.push_back(0);
  gen.push_back(0);
  index1.emplace(id, 0);
  index2.emplace(id, 0);

  GroupRun run;
  Key a, b;
  for (std::uint32_t head = 0; head < first.size(); ++head) {
    for (std::size_t c = 0; c < g1.colors(); ++c) {
      times(first[head], g1.adjacency(c), a);
      times(second[head], g2.adjacency(c), b);
      auto i1 = index1.find(a);
      auto i2 = index2.find(b);
      if (i1 != index1.end() || i2 != index2.end()) {
        if (i1 != index1.end() && i2 != index2.end() && i1->second == i2->second) continue;
        std::uint32_t other = i1 != index1.end() ? i1->second : i2->second;
        Word w_new = word_of(head);
        w_new.push_back(c);
        Word w_old = word_of(other);
        // w_old * w_new^-1 is the identity in one graph and not in the other.
        Word element = w_old;
        for (auto it = w_new.rbegin(); it != w_new.rend(); ++it) element.push_back(*it);
        Certificate cert;
        cert.word = reversed(element);
        cert.trace1 = word_trace(g1, cert.word);
        cert.trace2 = word_trace(g2, cert.word);
        cert.inconsistent_words = std::make_pair(w_old, w_new);
        run.status = PairClosure::Status::Inconsistent;
        run.collision = cert.inconsistent_words;
        run.certificate = std::move(cert);
        run.order = first.size();
        return run;
      }
      if (check_traces && key_trace(a) != key_trace(b)) {
        Word w = word_of(head);
        w.push_back(c);
        Certificate cert;
        cert.word = reversed(w);
        cert.trace1 = key_trace(a);
        cert.trace2 = key_trace(b);
        run.certificate = std::move(cert);
        run.order = first.size();
        return run;
      }
      if (first.size() >= cap) {
        run.status = PairClosure::Status::CapExceeded;
        run.order = first.size();
        return run;
      }
      auto idx = static_cast<std::uint32_t>(first.size());
      index1.emplace(a, idx);
      index2.emplace(b, idx);
      first.push_back(a);
      second.push_back(b);
      parent.push_back(head);
      gen.push_back(static_cast<std::uint8_t>(c));
    }
  }
  run.order = first.size();
  if (keep) {
    keep->elements.reserve(first.size());
    keep->words.reserve(first.size());
    for (std::uint32_t i = 0; i < first.size(); ++i) {
      keep->elements.emplace_back(perm_of(first[i]), perm_of(second[i]));
      keep->words.push_back(word_of(i));
    }
  }
  return run;
}

void require_same_shape(const LoopSignedGraph& g1, const LoopSignedGraph& g2, const char* what) {
  if (g1.colors() != g2.colors())
    throw std::invalid_argument(std::string(what) + ": colour counts differ");
  if (g1.vertices() != g2.vertices())
    throw std::invalid_argument(std::string(what) + ": vertex counts differ");
}

}  // namespace

PairClosure pair_closure(const LoopSignedGraph& g1, const LoopSignedGraph& g2, std::size_t cap) {
  require_same_shape(g1, g2, "pair_closure");
  PairClosure out;
  GroupRun run = run_group(g1, g2, cap, false, &out);
  out.status = run.status;
  out.collision = run.collision;
  return out;
}

IntertwinerOrbits intertwiner_orbits(const LoopSignedGraph& g1, const LoopSignedGraph& g2) {
  require_same_shape(g1, g2, "intertwiner_orbits");
  const std::size_t n = g1.vertices();
  const std::size_t m = n * n;
  std::vector<std::uint32_t> parent(m);
  std::vector<std::uint8_t> parity(m, 0);
  std::vector<std::uint8_t> zero(m, 0);
  for (std::size_t p = 0; p < m; ++p) parent[p] = static_cast<std::uint32_t>(p);

  auto find = [&](std::size_t p) {
    std::uint8_t par = 0;
    std::size_t r = p;
    while (parent[r] != r) {
      par ^= parity[r];
      r = parent[r];
    }
    // Path compression keeping parities relative to the root.
    std::uint8_t acc = par;
    std::size_t x = p;
    while (parent[x] != x) {
      std::size_t next = parent[x];
      std::uint8_t px = parity[x];
      parent[x] = static_cast<std::uint32_t>(r);
      parity[x] = acc;
      acc ^= px;
      x = next;
    }
    return std::make_pair(r, par);
  };

  for (std::size_t c = 0; c < g1.colors(); ++c) {
    const SignedPerm& a = g1.adjacency(c);
    const SignedPerm& ah = g2.adjacency(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // T[i][j] = s * T[ahat(i)][a(j)]
        std::size_t p = i * n + j;
        std::size_t q = ah.target(i) * n + a.target(j);
        std::uint8_t s = (ah.sign(i) * a.sign(j)) < 0 ? 1 : 0;
        auto [ra, pa] = find(p);
        auto [rb, pb] = find(q);
        if (ra == rb) {
          if ((pa ^ pb) != s) zero[ra] = 1;
        } else {
          parent[rb] = static_cast<std::uint32_t>(ra);
          parity[rb] = pa ^ pb ^ s;
          zero[ra] |= zero[rb];
        }
      }
  }

  IntertwinerOrbits out;
  out.n = n;
  out.orbit.assign(m, -1);
  out.sign.assign(m, 0);
  std::vector<std::int32_t> label(m, -1);
  std::vector<std::uint8_t> base(m, 0);
  for (std::size_t p = 0; p < m; ++p) {
    auto [r, par] = find(p);
    if (zero[r]) continue;
    if (label[r] < 0) {
      label[r] = static_cast<std::int32_t>(out.dim++);
      base[r] = par;
    }
    out.orbit[p] = label[r];
    out.sign[p] = (par ^ base[r]) ? -1 : 1;
  }
  return out;
}

std::vector<RatMatrix> basis_matrices(const IntertwinerOrbits& orbits) {
  const std::size_t n = orbits.n;
  std::vector<RatMatrix> basis(orbits.dim, RatMatrix(n, n));
  for (std::size_t p = 0; p < n * n; ++p)
    if (orbits.orbit[p] >= 0) basis[orbits.orbit[p]](p / n, p % n) = orbits.sign[p];
  return basis;
}

std::vector<RatMatrix> intertwiner_space(const LoopSignedGraph& g1, const LoopSignedGraph& g2) {
  return basis_matrices(intertwiner_orbits(g1, g2));
}

bool space_has_invertible(const IntertwinerOrbits& orbits, std::uint64_t seed, std::size_t trials) {
  const std::size_t n = orbits.n;
  if (n == 0) return true;
  if (orbits.dim == 0) return false;
  std::mt19937_64 rng(seed ^ 0x696e766572746962ULL);
  std::uniform_int_distribution<std::uint64_t> pick(1, modp::P - 1);
  std::vector<std::uint64_t> x(orbits.dim), m(n * n);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& v : x) v = pick(rng);
    for (std::size_t p = 0; p < n * n; ++p) {
      std::int32_t o = orbits.orbit[p];
      m[p] = o < 0 ? 0 : (orbits.sign[p] < 0 ? modp::neg(x[o]) : x[o]);
    }
    if (modp::eliminate(m, n, n) == n) return true;
  }
  return false;
}

namespace {

RatMatrix combine(const IntertwinerOrbits& orbits, const std::vector<long>& coeff) {
  const std::size_t n = orbits.n;
  RatMatrix t(n, n);
  for (std::size_t p = 0; p < n * n; ++p) {
    std::int32_t o = orbits.orbit[p];
    if (o >= 0) t(p / n, p % n) = coeff[o] * orbits.sign[p];
  }
  return t;
}

}  // namespace

std::optional<RatMatrix> find_invertible(const IntertwinerOrbits& orbits, std::uint64_t seed,
                                         std::size_t retries) {
  const std::size_t d = orbits.dim;
  if (orbits.n == 0) return RatMatrix(0, 0);
  if (d == 0) return std::nullopt;
  std::vector<long> coeff(d, 1);
  if (d == 1) {
    RatMatrix t = combine(orbits, coeff);
    if (t.invertible()) return t;
    return std::nullopt;
  }
  std::mt19937_64 rng(seed ^ 0x7769746e65737321ULL);
  std::uniform_int_distribution<long> pick(-3, 3);
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    if (attempt > 0)
      for (auto& v : coeff) v = pick(rng);
    RatMatrix t = combine(orbits, coeff);
    if (t.invertible()) return t;
  }
  if (d <= 8) {
    std::fill(coeff.begin(), coeff.end(), -1);
    for (;;) {
      RatMatrix t = combine(orbits, coeff);
      if (t.invertible()) return t;
      std::size_t k = 0;
      while (k < d && coeff[k] == 1) coeff[k++] = -1;
      if (k == d) break;
      ++coeff[k];
    }
  }
  return std::nullopt;
}

bool verify_witness(const LoopSignedGraph& g1, const LoopSignedGraph& g2, const RatMatrix& t) {
  if (g1.vertices() != g2.vertices() || g1.colors() != g2.colors())
    throw std::invalid_argument("verify_witness: graphs differ in shape");
  if (t.rows() != g1.vertices() || t.cols() != g1.vertices())
    throw std::invalid_argument("verify_witness: witness has the wrong dimension");
  for (std::size_t c = 0; c < g1.colors(); ++c)
    if (!(g2.adjacency(c) * t == t * g1.adjacency(c))) return false;
  return t.invertible();
}

Decision decide(const LoopSignedGraph& g1, const LoopSignedGraph& g2, const DecideOptions& opts) {
  if (g1.colors() != g2.colors()) throw std::invalid_argument("decide: colour counts differ");
  Decision d;
  d.method = opts.method == Method::Orbit ? Method::Orbit : Method::Group;
  if (g1.vertices() != g2.vertices()) {
    d.certificate = Certificate{Word{}, static_cast<std::int64_t>(g1.vertices()),
                                static_cast<std::int64_t>(g2.vertices()), std::nullopt};
    return d;
  }
  if (g1 == g2) {
    d.yes = true;
    if (opts.want_witness) d.witness = RatMatrix::identity(g1.vertices());
    return d;
  }

  auto orbit_route = [&]() {
    d.method = Method::Orbit;
    IntertwinerOrbits orbits = intertwiner_orbits(g1, g2);
    d.yes = space_has_invertible(orbits, opts.seed);
    if (d.yes && opts.want_witness) d.witness = find_invertible(orbits, opts.seed, opts.witness_retries);
  };

  if (opts.method != Method::Orbit) {
    GroupRun run = run_group(g1, g2, opts.cap, true, nullptr);
    if (run.status != PairClosure::Status::CapExceeded) {
      d.group_order = run.order;
      if (run.certificate) {
        d.certificate = std::move(run.certificate);
        return d;
      }
      d.yes = true;
      if (opts.want_witness) {
        IntertwinerOrbits orbits = intertwiner_orbits(g1, g2);
        d.witness = find_invertible(orbits, opts.seed, opts.witness_retries);
      }
      return d;
    }
    if (opts.method == Method::Group)
      throw std::runtime_error("decide: group closure exceeded the cap of " + std::to_string(opts.cap));
  }

  orbit_route();
  if (!d.yes) {
    GroupRun run = run_group(g1, g2, opts.cap, true, nullptr);
    if (run.certificate) d.certificate = std::move(run.certificate);
  }
  return d;
}

std::vector<std::vector<bool>> pairwise_check(const std::vector<LoopSignedGraph>& graphs,
                                              const DecideOptions& opts) {
  const std::size_t k = graphs.size();
  std::vector<std::vector<bool>> out(k, std::vector<bool>(k, false));
  DecideOptions o = opts;
  o.want_witness = false;
  for (std::size_t i = 0; i < k; ++i) {
    out[i][i] = true;
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& a = graphs[i];
      const auto& b = graphs[j];
      bool yes = a.vertices() == b.vertices() && a.colors() == b.colors() && decide(a, b, o).yes;
      out[i][j] = out[j][i] = yes;
    }
  }
  return out;
}

}  // namespace isospec
