#include "isospec/reps.hpp"

#include <algorithm>
#include <unordered_set>

namespace isospec {

SignedPerm evaluate_word(const std::vector<SignedPerm>& generators, const Word& word) {
  if (generators.empty()) throw std::invalid_argument("evaluate_word: no generators");
  SignedPerm p = SignedPerm::identity(generators.front().size());
  for (std::size_t c : word) {
    if (c >= generators.size()) throw std::out_of_range("evaluate_word: generator index out of range");
    p = compose(p, generators[c]);
  }
  return p;
}

std::size_t GroupClosure::index_of(const SignedPerm& p) const {
  auto it = index.find(p);
  return it == index.end() ? SIZE_MAX : it->second;
}

std::size_t GroupClosure::multiply(std::size_t a, std::size_t b) const {
  return index_of(compose(elements[a], elements[b]));
}

std::size_t GroupClosure::invert(std::size_t a) const { return index_of(inverse(elements[a])); }

GroupClosure closure(const std::vector<SignedPerm>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  const std::size_t n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n || !g.valid()) throw std::invalid_argument("closure: generators must be signed permutations of equal size");
  GroupClosure grp;
  grp.generators = generators;
  grp.elements.push_back(SignedPerm::identity(n));
  grp.words.emplace_back();
  grp.index.emplace(grp.elements.back(), 0);
  for (std::size_t head = 0; head < grp.elements.size(); ++head)
    for (std::size_t c = 0; c < generators.size(); ++c) {
      SignedPerm next = compose(grp.elements[head], generators[c]);
      if (grp.index.count(next)) continue;
      if (grp.elements.size() >= cap)
        throw CapExceeded("closure: more than " + std::to_string(cap) + " elements");
      Word w = grp.words[head];
      w.push_back(c);
      grp.index.emplace(next, grp.elements.size());
      grp.elements.push_back(std::move(next));
      grp.words.push_back(std::move(w));
    }
  return grp;
}

int SubCharPair::value(std::size_t element) const {
  auto it = std::lower_bound(subgroup.begin(), subgroup.end(), element);
  if (it == subgroup.end() || *it != element) return 0;
  return character[static_cast<std::size_t>(it - subgroup.begin())];
}

SubCharPair subgroup_from_words(const GroupClosure& group, const std::vector<Word>& words,
                                const std::vector<int>& values) {
  if (words.size() != values.size())
    throw std::invalid_argument("subgroup: one character value per word required");
  std::unordered_map<std::size_t, int> chi{{0, 1}};
  std::vector<std::size_t> gens;
  std::vector<int> gen_values;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (values[k] != 1 && values[k] != -1) throw std::invalid_argument("subgroup: character values must be +-1");
    std::size_t e = group.index_of(evaluate_word(group.generators, words[k]));
    if (e == SIZE_MAX) throw std::invalid_argument("subgroup: word outside the group");
    gens.push_back(e);
    gen_values.push_back(values[k]);
  }
  std::vector<std::size_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::size_t x = queue[h];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t y = group.multiply(x, gens[k]);
      int v = chi[x] * gen_values[k];
      auto [it, fresh] = chi.emplace(y, v);
      if (!fresh) {
        if (it->second != v) throw std::invalid_argument("subgroup: character values are not a homomorphism");
        continue;
      }
      queue.push_back(y);
    }
  }
  SubCharPair pair;
  for (auto& [e, v] : chi) pair.subgroup.push_back(e);
  std::sort(pair.subgroup.begin(), pair.subgroup.end());
  for (std::size_t e : pair.subgroup) pair.character.push_back(chi[e]);
  return pair;
}

LoopSignedGraph cayley_graph(const GroupClosure& group) {
  const std::size_t n = group.order();
  std::vector<SignedPerm> adj;
  for (std::size_t c = 0; c < group.generators.size(); ++c) {
    const SignedPerm& g = group.generators[c];
    if (g.is_identity() || !compose(g, g).is_identity())
      throw std::invalid_argument("cayley_graph: generator " + std::to_string(c + 1) + " is not an involution");
    std::vector<std::int32_t> packed(n);
    for (std::size_t i = 0; i < n; ++i)
      packed[i] = static_cast<std::int32_t>(group.index_of(compose(group.elements[i], g)) + 1);
    adj.push_back(SignedPerm::from_packed_unchecked(std::move(packed)));
  }
  return LoopSignedGraph(n, std::move(adj));
}

LoopSignedGraph schreier_graph(const GroupClosure& group, const SubCharPair& pair) {
  const std::size_t order = group.order();
  std::vector<std::size_t> coset(order, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != SIZE_MAX) continue;
    for (std::size_t h : pair.subgroup) coset[group.multiply(h, x)] = count;
    ++count;
  }
  std::vector<std::size_t> rep_inverse;
  std::vector<std::size_t> rep;
  std::vector<std::size_t> label(count, SIZE_MAX);
  label[coset[0]] = 0;
  rep.push_back(0);
  rep_inverse.push_back(0);
  const std::size_t colors = group.generators.size();
  std::vector<std::vector<std::int32_t>> packed(colors, std::vector<std::int32_t>(count, 0));
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t c = 0; c < colors; ++c) {
      std::size_t y = group.index_of(compose(group.elements[rep[i]], group.generators[c]));
      std::size_t k = coset[y];
      if (label[k] == SIZE_MAX) {
        label[k] = rep.size();
        rep.push_back(y);
        rep_inverse.push_back(group.invert(y));
      }
      std::size_t j = label[k];
      int r = pair.value(group.multiply(y, rep_inverse[j]));
      if (j == i) {
        packed[c][i] = r < 0 ? -static_cast<std::int32_t>(i + 1) : static_cast<std::int32_t>(i + 1);
      } else {
        if (r < 0)
          throw NotBipartite("schreier_graph: no representative system makes colour " +
                             std::to_string(c + 1) + " positive");
        packed[c][i] = static_cast<std::int32_t>(j + 1);
      }
    }
  std::vector<SignedPerm> adj;
  for (auto& p : packed) adj.push_back(SignedPerm::from_packed_unchecked(std::move(p)));
  return LoopSignedGraph(count, std::move(adj));
}

std::vector<SubCharPair> associated_pairs(const GroupClosure& group, const LoopSignedGraph& g) {
  std::vector<SubCharPair> out;
  for (const auto& comp : components(g)) {
    std::size_t v = comp.front();
    SubCharPair pair;
    for (std::size_t k = 0; k < group.order(); ++k)
      if (group.elements[k].target(v) == v) {
        pair.subgroup.push_back(k);
        pair.character.push_back(group.elements[k].sign(v));
      }
    out.push_back(std::move(pair));
  }
  return out;
}

ConjugacyClasses conjugacy_classes(const GroupClosure& group) {
  const std::size_t order = group.order();
  ConjugacyClasses cc;
  cc.class_of.assign(order, SIZE_MAX);
  std::vector<SignedPerm> inv;
  for (const auto& g : group.generators) inv.push_back(inverse(g));
  for (std::size_t x = 0; x < order; ++x) {
    if (cc.class_of[x] != SIZE_MAX) continue;
    std::size_t id = cc.classes.size();
    cc.classes.push_back({x});
    cc.class_of[x] = id;
    auto& members = cc.classes.back();
    for (std::size_t h = 0; h < members.size(); ++h)
      for (std::size_t c = 0; c < group.generators.size(); ++c) {
        std::size_t y = group.index_of(compose(compose(inv[c], group.elements[members[h]]), group.generators[c]));
        if (cc.class_of[y] != SIZE_MAX) continue;
        cc.class_of[y] = id;
        members.push_back(y);
      }
    std::sort(members.begin(), members.end());
  }
  return cc;
}

std::vector<std::int64_t> induced_character(const GroupClosure& group, const ConjugacyClasses& cc,
                                            const SubCharPair& pair) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (std::size_t h : pair.subgroup) seen[group.multiply(h, x)] = true;
  }
  std::vector<std::int64_t> chi;
  for (const auto& cls : cc.classes) {
    const SignedPerm& p = group.elements[cls.front()];
    std::int64_t total = 0;
    for (std::size_t g : reps) {
      const SignedPerm& e = group.elements[g];
      std::size_t k = group.index_of(compose(compose(e, p), inverse(e)));
      total += pair.value(k);
    }
    chi.push_back(total);
  }
  return chi;
}

std::vector<std::int64_t> induced_character(const GroupClosure& group, const SubCharPair& pair) {
  return induced_character(group, conjugacy_classes(group), pair);
}

bool characters_equal(const GroupClosure& group, const std::vector<SubCharPair>& pairs1,
                      const std::vector<SubCharPair>& pairs2) {
  ConjugacyClasses cc = conjugacy_classes(group);
  auto sum = [&](const std::vector<SubCharPair>& pairs) {
    std::vector<std::int64_t> total(cc.classes.size(), 0);
    for (const auto& p : pairs) {
      auto chi = induced_character(group, cc, p);
      for (std::size_t k = 0; k < chi.size(); ++k) total[k] += chi[k];
    }
    return total;
  };
  return sum(pairs1) == sum(pairs2);
}

namespace {

void require_subgroup(const GroupClosure& group, const std::vector<std::size_t>& h) {
  std::unordered_set<std::size_t> set(h.begin(), h.end());
  if (!set.count(0)) throw std::invalid_argument("gassmann_check: set lacks the identity");
  for (std::size_t a : h)
    for (std::size_t b : h)
      if (!set.count(group.multiply(a, b))) throw std::invalid_argument("gassmann_check: set is not a subgroup");
}

}  // namespace

bool gassmann_check(const GroupClosure& group, const std::vector<std::size_t>& h,
                    const std::vector<std::size_t>& h_hat) {
  require_subgroup(group, h);
  require_subgroup(group, h_hat);
  ConjugacyClasses cc = conjugacy_classes(group);
  std::vector<std::int64_t> count(cc.classes.size(), 0);
  for (std::size_t x : h) ++count[cc.class_of[x]];
  for (std::size_t x : h_hat) --count[cc.class_of[x]];
  return std::all_of(count.begin(), count.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace isospec
