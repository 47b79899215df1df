#include "isospec/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "isospec/invariants.hpp"
#include "isospec/transform.hpp"

namespace isospec {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Mixed: return "mixed";
    case Regime::Dirichlet: return "dirichlet";
    case Regime::Neumann: return "neumann";
  }
  return "mixed";
}

Regime regime_from_string(const std::string& s) {
  if (s == "mixed") return Regime::Mixed;
  if (s == "dirichlet") return Regime::Dirichlet;
  if (s == "neumann") return Regime::Neumann;
  throw std::invalid_argument("unknown loop regime '" + s + "'");
}

namespace {

struct Stop {};

// Orderly generation over vertex-major BFS codes rooted at vertex 0.  Slot
// v*C + c holds 0 (D loop), 1 (N loop) or 2 + partner label.  A branch is cut
// once another root provably yields a smaller code.
class Generator {
 public:
  Generator(const EnumOptions& opts, const std::function<void(const LoopSignedGraph&)>& emit)
      : opts_(opts),
        emit_(emit),
        n_(static_cast<int>(opts.vertices)),
        c_(static_cast<int>(opts.colors)),
        mixed_(opts.regime == Regime::Mixed),
        part_(opts.vertices * opts.colors, -1),
        code_(opts.vertices * opts.colors, 0),
        label_(opts.vertices, -1) {
    order_.reserve(opts.vertices);
  }

  EnumStats run() {
    if (n_ < 1 || c_ < 1) throw std::invalid_argument("enumerate: need at least one vertex and one colour");
    if (opts_.shard_count == 0 || opts_.shard_index >= opts_.shard_count)
      throw std::invalid_argument("enumerate: bad shard selection");
    count_ = 1;
    try {
      step(0);
    } catch (const Stop&) {
      stats_.truncated = true;
    }
    return stats_;
  }

 private:
  void step(int slot) {
    ++stats_.search_nodes;
    if (opts_.shard_count > 1 && slot == static_cast<int>(opts_.shard_depth)) {
      std::size_t id = shard_counter_++;
      if (id % opts_.shard_count != opts_.shard_index) return;
    }
    const int v = slot / c_;
    const int c = slot % c_;
    if (c == 0 && v > 0) {
      if (v < n_ && count_ == v) return;  // vertices 0..v-1 closed off: disconnected
      if (!root_zero_minimal(v - 1)) return;
    }
    if (slot == n_ * c_) {
      leaf();
      return;
    }
    if (part_[slot] >= 0) {
      code_[slot] = 2u + static_cast<std::uint32_t>(part_[slot]);
      step(slot + 1);
      return;
    }
    part_[slot] = v;
    code_[slot] = 0;
    step(slot + 1);
    if (mixed_) {
      code_[slot] = 1;
      step(slot + 1);
    }
    part_[slot] = -1;
    if (opts_.treelike_only && edges_ + 1 > n_ - 1) return;
    for (int u = v + 1; u < count_; ++u) {
      if (part_[u * c_ + c] >= 0) continue;
      link(slot, u, c);
      step(slot + 1);
      unlink(slot, u, c);
    }
    if (count_ < n_) {
      int u = count_++;
      link(slot, u, c);
      step(slot + 1);
      unlink(slot, u, c);
      --count_;
    }
  }

  void link(int slot, int u, int c) {
    part_[slot] = u;
    part_[u * c_ + c] = slot / c_;
    code_[slot] = 2u + static_cast<std::uint32_t>(u);
    ++edges_;
  }

  void unlink(int slot, int u, int c) {
    part_[slot] = -1;
    part_[u * c_ + c] = -1;
    --edges_;
  }

  // Rows 0..upto are complete.  False when some root r <= upto has a BFS code
  // smaller than the code rooted at 0 on the determined prefix.
  bool root_zero_minimal(int upto) {
    for (int r = 1; r <= upto; ++r)
      if (compare_root(r, upto) < 0) return false;
    return true;
  }

  int compare_root(int r, int upto) {
    order_.clear();
    order_.push_back(r);
    label_[r] = 0;
    int result = 0;
    std::size_t k = 0;
    for (std::size_t h = 0; h < order_.size() && result == 0; ++h) {
      const int x = order_[h];
      if (x > upto) break;
      for (int c = 0; c < c_; ++c, ++k) {
        const int p = part_[x * c_ + c];
        std::uint32_t sym;
        if (p == x) {
          sym = code_[x * c_ + c];
        } else {
          if (label_[p] < 0) {
            label_[p] = static_cast<int>(order_.size());
            order_.push_back(p);
          }
          sym = 2u + static_cast<std::uint32_t>(label_[p]);
        }
        if (sym != code_[k]) {
          result = sym < code_[k] ? -1 : 1;
          break;
        }
      }
    }
    for (int x : order_) label_[x] = -1;
    return result;
  }

  void leaf() {
    if (opts_.treelike_only && edges_ != n_ - 1) return;
    const bool tree = edges_ == n_ - 1;
    std::vector<SignedPerm> adj;
    adj.reserve(static_cast<std::size_t>(c_));
    for (int c = 0; c < c_; ++c) {
      std::vector<std::int32_t> packed(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        const int p = part_[v * c_ + c];
        std::int32_t e = p + 1;
        if (p == v) {
          bool dirichlet = mixed_ ? code_[v * c_ + c] == 0 : opts_.regime == Regime::Dirichlet;
          if (dirichlet) e = -e;
        }
        packed[static_cast<std::size_t>(v)] = e;
      }
      adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
    }
    ++stats_.classes;
    if (tree) ++stats_.treelike;
    emit_(LoopSignedGraph(static_cast<std::size_t>(n_), std::move(adj)));
    if (opts_.limit && stats_.classes >= opts_.limit) throw Stop{};
  }

  const EnumOptions& opts_;
  const std::function<void(const LoopSignedGraph&)>& emit_;
  const int n_;
  const int c_;
  const bool mixed_;
  std::vector<int> part_;
  std::vector<std::uint32_t> code_;
  std::vector<int> label_;
  std::vector<int> order_;
  int count_ = 1;
  int edges_ = 0;
  std::size_t shard_counter_ = 0;
  EnumStats stats_;
};

// Compact storage of many graphs with equal V and C.
class GraphStore {
 public:
  GraphStore(std::size_t n, std::size_t c) : n_(n), c_(c) {}

  void add(const LoopSignedGraph& g) {
    for (const auto& a : g.adjacency())
      for (std::int32_t e : a.packed()) data_.push_back(static_cast<std::int8_t>(e));
    tree_.push_back(is_treelike(g));
  }

  void append(const GraphStore& o) {
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    tree_.insert(tree_.end(), o.tree_.begin(), o.tree_.end());
  }

  std::size_t size() const { return tree_.size(); }
  bool treelike(std::size_t i) const { return tree_[i]; }

  LoopSignedGraph get(std::size_t i) const {
    std::vector<SignedPerm> adj;
    const std::int8_t* base = data_.data() + i * n_ * c_;
    for (std::size_t c = 0; c < c_; ++c) {
      std::vector<std::int32_t> packed(base + c * n_, base + (c + 1) * n_);
      adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
    }
    return LoopSignedGraph(n_, std::move(adj));
  }

 private:
  std::size_t n_;
  std::size_t c_;
  std::vector<std::int8_t> data_;
  std::vector<bool> tree_;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

struct PairSearch {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t decisions = 0;
};

PairSearch search_pairs(const GraphStore& store, std::size_t colors, const CensusOptions& opts) {
  PairSearch out;
  const std::size_t total = store.size();
  if (total < 2) return out;
  const std::vector<Word> words = reduced_necklaces(colors, opts.max_word);

  std::vector<std::pair<std::uint64_t, std::size_t>> keyed(total);
  for (std::size_t i = 0; i < total; ++i) {
    LoopSignedGraph g = store.get(i);
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (const Word& w : words) h = mix(h, static_cast<std::uint64_t>(word_trace(g, w)));
    keyed[i] = {h, i};
  }
  std::sort(keyed.begin(), keyed.end());

  DecideOptions dopts = opts.decide;
  dopts.want_witness = false;
  auto decide_pair = [&](const LoopSignedGraph& ga, const LoopSignedGraph& gb) {
    ++out.decisions;
    bool yes = decide(ga, gb, dopts).yes;
    if (opts.on_decision) opts.on_decision(ga, gb, yes);
    return yes;
  };

  for (std::size_t lo = 0; lo < total;) {
    std::size_t hi = lo;
    while (hi < total && keyed[hi].first == keyed[lo].first) ++hi;
    if (hi - lo >= 2) {
      std::vector<std::size_t> members;
      for (std::size_t k = lo; k < hi; ++k) members.push_back(keyed[k].second);
      std::sort(members.begin(), members.end());
      std::vector<LoopSignedGraph> graphs;
      for (std::size_t m : members) graphs.push_back(store.get(m));

      if (opts.exhaustive_buckets) {
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            if (decide_pair(graphs[i], graphs[j]))
              out.pairs.emplace_back(members[i], members[j]);
      } else {
        // Split by the seeded probes, then cluster: transplantability is an
        // equivalence relation, so one comparison per cluster suffices.
        std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, std::vector<std::size_t>> sub;
        for (std::size_t i = 0; i < members.size(); ++i) {
          const auto& g = graphs[i];
          auto probe = kron_probe(g, opts.kron_dim, 2 * g.vertices(), opts.seed);
          sub[{std::move(probe), det_probe(g, opts.seed)}].push_back(i);
        }
        for (auto& [key, idx] : sub) {
          if (idx.size() < 2) continue;
          std::vector<std::vector<std::size_t>> clusters;
          for (std::size_t i : idx) {
            bool placed = false;
            for (auto& cl : clusters)
              if (decide_pair(graphs[cl.front()], graphs[i])) {
                cl.push_back(i);
                placed = true;
                break;
              }
            if (!placed) clusters.push_back({i});
          }
          for (const auto& cl : clusters)
            for (std::size_t a = 0; a < cl.size(); ++a)
              for (std::size_t b = a + 1; b < cl.size(); ++b)
                out.pairs.emplace_back(std::min(members[cl[a]], members[cl[b]]),
                                       std::max(members[cl[a]], members[cl[b]]));
        }
      }
    }
    lo = hi;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::string code_key(const LoopSignedGraph& g) {
  CanonicalCode cc = canonical_form(g);
  std::string s;
  s.reserve(cc.code.size() * 2);
  for (std::uint32_t v : cc.code) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>(v >> 8));
  }
  return s;
}

std::string pair_key(const std::string& a, const std::string& b) {
  return a < b ? a + '|' + b : b + '|' + a;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent.size());
    std::unordered_map<std::size_t, std::size_t> id;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      auto [it, fresh] = id.emplace(find(i), id.size());
      out[i] = it->second;
    }
    return out;
  }
};

LoopSignedGraph permute_colours(const LoopSignedGraph& g, const std::vector<std::size_t>& perm) {
  std::vector<SignedPerm> adj;
  for (std::size_t k = 0; k < perm.size(); ++k) adj.push_back(g.adjacency(perm[k]));
  return LoopSignedGraph(g.vertices(), std::move(adj));
}

// Union pairs related by colour permutations and, with braids, by every
// normalizable braid applied to both members.
std::vector<std::size_t> pair_classes(const std::vector<ClassPair>& pairs, bool braids) {
  UnionFind uf(pairs.size());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    index.emplace(pair_key(code_key(pairs[i].first), code_key(pairs[i].second)), i);
  auto link = [&](std::size_t i, const LoopSignedGraph& a, const LoopSignedGraph& b) {
    std::string ka = code_key(a), kb = code_key(b);
    if (ka == kb) return;
    auto it = index.find(pair_key(ka, kb));
    if (it != index.end()) uf.unite(i, it->second);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const std::size_t colors = p.first.colors();
    std::vector<std::size_t> perm(colors);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end()))
      link(i, permute_colours(p.first, perm), permute_colours(p.second, perm));
    if (!braids) continue;
    for (std::size_t c = 0; c < colors; ++c)
      for (std::size_t d = 0; d < colors; ++d) {
        if (c == d) continue;
        auto a = braid(p.first, c, d);
        auto b = braid(p.second, c, d);
        if (a && b) link(i, a->graph, b->graph);
      }
  }
  return uf.labels();
}

}  // namespace

EnumStats enumerate_classes(const EnumOptions& opts, const std::function<void(const LoopSignedGraph&)>& emit) {
  Generator gen(opts, emit);
  return gen.run();
}

std::vector<ClassPair> find_pairs(const std::vector<LoopSignedGraph>& graphs, const CensusOptions& opts) {
  if (graphs.empty()) return {};
  GraphStore store(graphs.front().vertices(), graphs.front().colors());
  for (const auto& g : graphs) {
    if (g.vertices() != graphs.front().vertices() || g.colors() != graphs.front().colors())
      throw std::invalid_argument("find_pairs: graphs differ in shape");
    store.add(g);
  }
  PairSearch found = search_pairs(store, graphs.front().colors(), opts);
  std::vector<ClassPair> out;
  for (auto [a, b] : found.pairs) out.push_back({graphs[a], graphs[b], store.treelike(a) && store.treelike(b)});
  return out;
}

std::vector<std::size_t> colour_classes(const std::vector<ClassPair>& pairs) { return pair_classes(pairs, false); }

std::vector<std::size_t> quilt_classes(const std::vector<ClassPair>& pairs) { return pair_classes(pairs, true); }

std::size_t count_classes(const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

CensusRow census(const CensusOptions& opts) {
  const EnumOptions& e = opts.enumeration;
  CensusRow row;
  row.vertices = e.vertices;
  row.colors = e.colors;
  row.regime = e.regime;
  row.treelike_only = e.treelike_only;

  GraphStore store(e.vertices, e.colors);
  EnumStats stats;
  if (opts.threads <= 1 || e.shard_count > 1) {
    stats = enumerate_classes(e, [&](const LoopSignedGraph& g) { store.add(g); });
  } else {
    std::size_t k = opts.threads;
    std::vector<GraphStore> parts(k, GraphStore(e.vertices, e.colors));
    std::vector<EnumStats> part_stats(k);
    std::vector<std::exception_ptr> errors(k);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < k; ++i)
      workers.emplace_back([&, i] {
        try {
          EnumOptions sub = e;
          sub.shard_count = k;
          sub.shard_index = i;
          part_stats[i] = enumerate_classes(sub, [&](const LoopSignedGraph& g) { parts[i].add(g); });
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& w : workers) w.join();
    for (std::size_t i = 0; i < k; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      store.append(parts[i]);
      stats.classes += part_stats[i].classes;
      stats.treelike += part_stats[i].treelike;
      stats.search_nodes += part_stats[i].search_nodes;
      stats.truncated = stats.truncated || part_stats[i].truncated;
    }
  }
  if (stats.truncated) throw std::runtime_error("census: enumeration stopped at the configured limit");
  row.class_count = stats.classes;
  row.treelike_count = stats.treelike;

  PairSearch found = search_pairs(store, e.colors, opts);
  row.decisions = found.decisions;
  for (auto [a, b] : found.pairs) {
    bool tree = store.treelike(a) && store.treelike(b);
    row.pairs.push_back({store.get(a), store.get(b), tree});
  }
  row.pair_count = row.pairs.size();

  std::vector<std::size_t> labels = colour_classes(row.pairs);
  row.class_pair_count = count_classes(labels);
  std::vector<std::size_t> tree_labels;
  for (std::size_t i = 0; i < row.pairs.size(); ++i)
    if (row.pairs[i].treelike) {
      ++row.treelike_pair_count;
      tree_labels.push_back(labels[i]);
    }
  row.treelike_class_pair_count = count_classes(tree_labels);
  if (opts.quilts) row.quilt_count = count_classes(quilt_classes(row.pairs));
  return row;
}

}  // namespace isospec
