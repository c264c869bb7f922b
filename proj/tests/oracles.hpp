#pragma once

// Independent brute-force routes used to freeze expected values. Nothing in
// here touches the stabilizer chain.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "pgt/permutation.hpp"

namespace oracle {

using pgt::Permutation;

/// Breadth-first closure of a generating set under right multiplication.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Permutation next = queue[i] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return seen;
}

/// Elements of `group` that conjugate the set `sub` onto itself.
inline std::set<Permutation> normalizer(const std::set<Permutation>& group, const std::set<Permutation>& sub) {
  std::set<Permutation> out;
  for (const auto& g : group) {
    bool ok = true;
    for (const auto& h : sub)
      if (!sub.count(h.conjugate_by(g))) {
        ok = false;
        break;
      }
    if (ok) out.insert(g);
  }
  return out;
}

inline std::set<Permutation> centralizer(const std::set<Permutation>& group, const std::set<Permutation>& sub) {
  std::set<Permutation> out;
  for (const auto& g : group)
    if (std::all_of(sub.begin(), sub.end(), [&](const Permutation& h) { return h * g == g * h; })) out.insert(g);
  return out;
}

/// Smallest subset containing `seed` closed under products and conjugation by `group`.
inline std::set<Permutation> normal_closure(std::size_t degree, const std::set<Permutation>& group,
                                            const std::vector<Permutation>& seed) {
  std::vector<Permutation> gens;
  for (const auto& s : seed)
    for (const auto& g : group) gens.push_back(s.conjugate_by(g));
  return closure(degree, gens);
}

/// Subgroup generated by all commutators of elements of `group` (brute force).
inline std::set<Permutation> derived(std::size_t degree, const std::set<Permutation>& group) {
  std::vector<Permutation> comms;
  for (const auto& a : group)
    for (const auto& b : group) comms.push_back(pgt::commutator(a, b));
  return closure(degree, comms);
}

inline std::set<Permutation> intersect(const std::set<Permutation>& a, const std::set<Permutation>& b) {
  std::set<Permutation> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

inline std::set<Permutation> center(const std::set<Permutation>& group) { return centralizer(group, group); }

/// Z_{k+1} = {x : [x, g] in Z_k for all g in the group}, tested against every element.
inline std::set<Permutation> upper_central_term(std::size_t degree, const std::set<Permutation>& group, unsigned k) {
  std::set<Permutation> z{Permutation(degree)};
  for (unsigned i = 0; i < k; ++i) {
    std::set<Permutation> next;
    for (const auto& x : group)
      if (std::all_of(group.begin(), group.end(), [&](const Permutation& g) { return z.count(pgt::commutator(x, g)); }))
        next.insert(x);
    z = std::move(next);
  }
  return z;
}

/// Every subgroup, by adjoining elements to known subgroups until nothing new appears.
inline std::set<std::set<Permutation>> all_subgroups(std::size_t degree, const std::set<Permutation>& group) {
  std::set<std::set<Permutation>> found{{Permutation(degree)}};
  std::vector<std::set<Permutation>> queue(found.begin(), found.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& x : group) {
      if (queue[i].count(x)) continue;
      std::vector<Permutation> gens(queue[i].begin(), queue[i].end());
      gens.push_back(x);
      auto h = closure(degree, gens);
      if (found.insert(h).second) queue.push_back(h);
    }
  return found;
}

/// Intersection of N(H) over every subgroup H.
inline std::set<Permutation> norm(std::size_t degree, const std::set<Permutation>& group) {
  std::set<Permutation> acc = group;
  for (const auto& h : all_subgroups(degree, group)) acc = intersect(acc, normalizer(group, h));
  return acc;
}

/// Intersection of the maximal proper subgroups.
inline std::set<Permutation> frattini(std::size_t degree, const std::set<Permutation>& group) {
  auto subs = all_subgroups(degree, group);
  std::set<Permutation> acc = group;
  for (const auto& a : subs) {
    if (a.size() == group.size()) continue;
    bool maximal = true;
    for (const auto& b : subs)
      if (b.size() > a.size() && b.size() < group.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        maximal = false;
    if (maximal) acc = intersect(acc, a);
  }
  return acc;
}

/// G is p-nilpotent iff its p'-elements form a subgroup of order |G|_p'.
inline bool p_nilpotent(std::size_t degree, const std::set<Permutation>& group, std::uint64_t p) {
  std::vector<Permutation> pprime;
  for (const auto& x : group)
    if (x.order() % p != 0) pprime.push_back(x);
  std::uint64_t n = group.size();
  while (n % p == 0) n /= p;
  return pprime.size() == n && closure(degree, pprime).size() == n;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Subgroups of the given order.
inline std::vector<std::set<Permutation>> subgroups_of_order(std::size_t degree, const std::set<Permutation>& group,
                                                            std::size_t order) {
  std::vector<std::set<Permutation>> out;
  for (const auto& h : all_subgroups(degree, group))
    if (h.size() == order) out.push_back(h);
  return out;
}

}  // namespace oracle
