#include "pgt/small_group.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "pgt/errors.hpp"

namespace pgt {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

SmallGroup::SmallGroup(const PermGroup& G, std::size_t cap) : group_(G) {
  require_within_cap(G.order(), cap, "Cayley table");
  elements_ = G.elements();
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  if (!elements_[0].is_identity()) throw std::logic_error("SmallGroup: first element is not the identity");
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    orders_[a] = static_cast<std::uint32_t>(elements_[a].order());
  }
  for (const auto& g : G.generators()) gens_.push_back(index_.at(g));
  class_sizes_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint32_t> cls{a};
    seen[a] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto g : gens_) {
        auto c = conj(cls[i], g);
        if (!seen[c]) {
          seen[c] = true;
          cls.push_back(c);
        }
      }
    for (auto c : cls) class_sizes_[c] = static_cast<std::uint32_t>(cls.size());
  }
}

std::uint32_t SmallGroup::index_of(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw InvalidArgument("element is not in the group");
  return it->second;
}

std::uint32_t SmallGroup::power(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 0;
  e %= orders_[a];
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ElementSet SmallGroup::closure(const std::vector<std::uint32_t>& gens) const {
  ElementSet s(size());
  std::vector<std::uint32_t> list{0};
  s.set(0);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : gens) {
      auto c = mul(list[i], g);
      if (!s.test(c)) {
        s.set(c);
        list.push_back(c);
      }
    }
  return s;
}

ElementSet SmallGroup::normal_closure(const std::vector<std::uint32_t>& gens) const {
  // Saturate the generator list under conjugation, then close.
  ElementSet conj_set(size());
  std::vector<std::uint32_t> list;
  for (auto g : gens)
    if (!conj_set.test(g)) {
      conj_set.set(g);
      list.push_back(g);
    }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : gens_) {
      auto c = conj(list[i], g);
      if (!conj_set.test(c)) {
        conj_set.set(c);
        list.push_back(c);
      }
    }
  return closure(list);
}

PermGroup SmallGroup::to_group(const ElementSet& s) const {
  std::vector<Permutation> members;
  for (auto i : s.members()) members.push_back(elements_[i]);
  PermGroup K = PermGroup::trivial(group_.degree());
  std::vector<Permutation> gens;
  for (const auto& x : members) {
    if (K.contains(x)) continue;
    gens.push_back(x);
    K = PermGroup(group_.degree(), gens);
  }
  return K;
}

ElementSet SmallGroup::to_set(const PermGroup& H) const {
  std::vector<std::uint32_t> gens;
  for (const auto& h : H.generators()) gens.push_back(index_of(h));
  return closure(gens);
}

namespace {

std::vector<std::uint32_t> cyclic_generators(const SmallGroup& G) {
  // One generator per cyclic subgroup.
  std::vector<std::uint32_t> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::uint32_t x = 1; x < G.size(); ++x)
    if (seen.insert(G.closure({x})).second) out.push_back(x);
  return out;
}

std::vector<SubgroupRecord> close_under_joins(const SmallGroup& G, const std::vector<SubgroupRecord>& atoms) {
  std::vector<SubgroupRecord> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  SubgroupRecord trivial{ElementSet(G.size()), {}};
  trivial.members.set(0);
  seen.insert(trivial.members);
  out.push_back(std::move(trivial));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& atom : atoms) {
      if (atom.members.is_subset_of(out[i].members)) continue;
      std::vector<std::uint32_t> gens = out[i].generators;
      gens.insert(gens.end(), atom.generators.begin(), atom.generators.end());
      ElementSet joined = G.closure(gens);
      if (seen.insert(joined).second) out.push_back({std::move(joined), std::move(gens)});
    }
  }
  return out;
}

}  // namespace

std::vector<SubgroupRecord> all_subgroups(const SmallGroup& G) {
  require_within_cap(G.size(), limits().subgroup_enumeration_cap, "subgroup enumeration");
  std::vector<SubgroupRecord> atoms;
  for (auto x : cyclic_generators(G)) atoms.push_back({G.closure({x}), {x}});
  return close_under_joins(G, atoms);
}

std::vector<SubgroupRecord> normal_subgroups(const SmallGroup& G) {
  std::vector<SubgroupRecord> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<bool> done(G.size(), false);
  for (std::uint32_t x = 1; x < G.size(); ++x) {
    if (done[x]) continue;
    ElementSet cls(G.size());
    std::vector<std::uint32_t> gens;
    for (std::uint32_t g = 0; g < G.size(); ++g) {
      auto c = G.conj(x, g);
      done[c] = true;
      if (!cls.test(c)) {
        cls.set(c);
        gens.push_back(c);
      }
    }
    // Conjugation-saturated generators keep every join normal.
    ElementSet nc = G.closure(gens);
    if (!seen.insert(nc).second) continue;
    atoms.push_back({std::move(nc), std::move(gens)});
  }
  return close_under_joins(G, atoms);
}

std::vector<std::uint32_t> small_generating_set(const SmallGroup& G) {
  std::vector<std::uint32_t> order(G.size());
  for (std::uint32_t i = 0; i < G.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return G.element_order(a) > G.element_order(b); });
  std::vector<std::uint32_t> gens;
  ElementSet current = G.closure({});
  for (auto x : order) {
    if (current.count() == G.size()) break;
    if (current.test(x)) continue;
    gens.push_back(x);
    current = G.closure(gens);
  }
  return gens;
}

namespace detail {

void search_isomorphisms(const SmallGroup& A, const SmallGroup& B, const std::vector<std::uint32_t>& gens,
                         const std::vector<std::vector<std::uint32_t>>& candidates,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& found) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t depth_max = gens.size();
  std::vector<std::uint32_t> images(depth_max);
  std::size_t nodes = 0;
  const std::size_t node_cap = limits().search_node_cap;

  // Extends the assignment of gens[0..depth) to <gens[0..depth)>; empty on conflict.
  auto extend = [&](std::size_t depth, std::vector<std::uint32_t>& map) -> bool {
    map.assign(A.size(), kUnset);
    std::vector<bool> used(B.size(), false);
    map[0] = 0;
    used[0] = true;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto a = queue[q];
      for (std::size_t i = 0; i < depth; ++i) {
        const auto next = A.mul(a, gens[i]);
        const auto val = B.mul(map[a], images[i]);
        if (map[next] == kUnset) {
          if (used[val]) return false;
          used[val] = true;
          map[next] = val;
          queue.push_back(next);
        } else if (map[next] != val) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<std::uint32_t> map;
  bool stop = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (stop) return;
    if (depth == depth_max) {
      if (!extend(depth, map)) return;
      if (std::find(map.begin(), map.end(), kUnset) != map.end()) return;
      if (!found(map)) stop = true;
      return;
    }
    for (auto c : candidates[depth]) {
      if (++nodes > node_cap) throw ResourceCapExceeded("isomorphism search exceeded node cap");
      images[depth] = c;
      if (!extend(depth + 1, map)) continue;
      recurse(depth + 1);
      if (stop) return;
    }
  };
  if (A.size() != B.size()) return;
  recurse(0);
}

}  // namespace detail

std::vector<std::vector<std::uint32_t>> automorphism_tables(const SmallGroup& G) {
  require_within_cap(G.size(), limits().automorphism_cap, "automorphism search");
  auto gens = small_generating_set(G);
  std::vector<std::vector<std::uint32_t>> candidates;
  for (auto g : gens) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = 0; x < G.size(); ++x)
      if (G.element_order(x) == G.element_order(g) && G.class_sizes()[x] == G.class_sizes()[g]) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<std::uint32_t>> out;
  detail::search_isomorphisms(G, G, gens, candidates, [&](const std::vector<std::uint32_t>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace pgt
