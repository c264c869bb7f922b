#include "pgt/sylow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pgt/arith.hpp"
#include "pgt/cosets.hpp"
#include "pgt/errors.hpp"
#include "pgt/small_group.hpp"
#include "pgt/structure.hpp"
#include "pgt/subgroups.hpp"

namespace pgt {

PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup: p is not prime");
  if (G.order() % p != 0) throw InvalidArgument("sylow_subgroup: p does not divide |G|");
  const std::uint64_t target = p_part(G.order(), p);
  const auto e = static_cast<long long>(target);
  PermGroup Q = PermGroup::trivial(G.degree());
  while (Q.order() < target) {
    const PermGroup N = Q.is_trivial() ? G : normalizer(G, Q);
    std::optional<Permutation> pick;
    N.for_each_element([&](const Permutation& x) {
      if (!pick && !Q.contains(x) && Q.contains(x.pow(e))) pick = x;
    });
    if (!pick) throw std::logic_error("sylow_subgroup: normalizer ascent stalled");
    Q = Q.with_generators({*pick});
  }
  return Q;
}

SylowFamily all_sylow_subgroups(const PermGroup& G, std::uint64_t p) {
  SylowFamily fam;
  fam.prime = p;
  PermGroup P = sylow_subgroup(G, p);
  fam.normalizer = normalizer(G, P);
  require_within_cap(G.order() / fam.normalizer.order(), limits().sylow_family_cap, "Sylow family");
  const Transversal T = right_transversal(G, fam.normalizer);
  fam.members.reserve(T.size());
  fam.members.push_back(P);
  for (std::size_t i = 1; i < T.size(); ++i) fam.members.push_back(conjugate_subgroup(P, T.reps()[i]));
  if (fam.members.size() % p != 1 % p) throw std::logic_error("all_sylow_subgroups: count is not 1 mod p");
  return fam;
}

std::vector<SylowIntersection> sylow_intersections(const SylowFamily& family) {
  std::vector<SylowIntersection> out;
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) out.push_back({i, j, intersection(m[i], m[j])});
  return out;
}

std::vector<SylowIntersection> sylow_intersections(const PermGroup& G, std::uint64_t p) {
  return sylow_intersections(all_sylow_subgroups(G, p));
}

std::uint64_t max_intersection_order(const SylowFamily& family) {
  std::uint64_t best = 1;
  const PermGroup& P = family.base_subgroup();
  for (std::size_t j = 0; j < family.members.size(); ++j)
    if (j != family.base) best = std::max(best, intersection(P, family.members[j]).order());
  return best;
}

std::uint64_t max_intersection_order(const PermGroup& G, std::uint64_t p) {
  return max_intersection_order(all_sylow_subgroups(G, p));
}

namespace {

std::uint64_t sylow_prime(const PermGroup& G, const PermGroup& P, const char* what) {
  auto p = p_group_prime(P);
  if (!p || !is_subgroup(G, P) || P.order() != p_part(G.order(), *p))
    throw InvalidArgument(std::string(what) + ": not a Sylow subgroup");
  return *p;
}

TameIntersectionRecord tame_record(const PermGroup& G, const PermGroup& P, const PermGroup& Q, PermGroup D,
                                   std::uint64_t p) {
  TameIntersectionRecord r{P, Q, std::move(D), false, {}, false, false};
  r.normalizer = normalizer(G, r.D);
  const std::uint64_t np = p_part(r.normalizer.order(), p);
  r.tame = normalizer(P, r.D).order() == np && normalizer(Q, r.D).order() == np;
  r.normalizer_p_nilpotent = is_p_nilpotent(r.normalizer, p);
  r.n_over_c_is_p_group = is_power_of(r.normalizer.order() / centralizer(G, r.D).order(), p);
  return r;
}

}  // namespace

TameIntersectionRecord is_tame_intersection(const PermGroup& G, const PermGroup& P, const PermGroup& Q) {
  const std::uint64_t p = sylow_prime(G, P, "is_tame_intersection");
  if (sylow_prime(G, Q, "is_tame_intersection") != p)
    throw InvalidArgument("is_tame_intersection: P and Q belong to different primes");
  return tame_record(G, P, Q, intersection(P, Q), p);
}

std::vector<TameIntersectionRecord> tame_intersections_between(const PermGroup& G, const SylowFamily& family,
                                                               const PermGroup& L, bool strict_upper) {
  const PermGroup& P = family.base_subgroup();
  if (!is_subgroup(P, L)) throw InvalidArgument("tame_intersections_between: L is not a subgroup of P");
  std::vector<PermGroup> seen;
  std::vector<TameIntersectionRecord> out;
  for (const auto& Q : family.members) {
    PermGroup D = intersection(P, Q);
    if (D.order() <= L.order() || !is_subgroup(D, L)) continue;
    if (strict_upper && D.order() == P.order()) continue;
    bool dup = false;
    for (const auto& s : seen)
      if (s.order() == D.order() && is_subgroup(s, D)) dup = true;
    if (dup) continue;
    seen.push_back(D);
    TameIntersectionRecord r = tame_record(G, P, Q, std::move(D), family.prime);
    if (r.tame) out.push_back(std::move(r));
  }
  return out;
}

std::vector<TameIntersectionRecord> tame_intersections_between(const PermGroup& G, std::uint64_t p,
                                                               const PermGroup& L, bool strict_upper) {
  return tame_intersections_between(G, all_sylow_subgroups(G, p), L, strict_upper);
}

WeakClosureResult is_weakly_closed(const PermGroup& G, const PermGroup& P, const PermGroup& K) {
  if (!is_subgroup(P, K)) throw InvalidArgument("is_weakly_closed: K is not a subgroup of P");
  WeakClosureResult res;
  const Transversal T = right_transversal(G, normalizer(G, K));
  for (std::size_t i = 1; i < T.size(); ++i) {
    const Permutation& t = T.reps()[i];
    bool inside = true;
    for (const auto& k : K.generators())
      if (!P.contains(k.conjugate_by(t))) {
        inside = false;
        break;
      }
    if (inside) {
      res.weakly_closed = false;
      res.conjugator = t;
      res.conjugate = conjugate_subgroup(K, t);
      break;
    }
  }
  return res;
}

std::vector<PermGroup> characteristic_subgroups_above(const PermGroup& P, const PermGroup& L) {
  if (!is_subgroup(P, L)) throw InvalidArgument("characteristic_subgroups_above: L is not a subgroup of P");
  if (L.order() == P.order()) return {P};
  const SmallGroup S(P, limits().automorphism_cap);
  const ElementSet below = S.to_set(L);
  const auto normals = normal_subgroups(S);
  std::vector<const SubgroupRecord*> alive;
  for (const auto& sub : normals)
    if (below.is_subset_of(sub.members)) alive.push_back(&sub);
  // Automorphisms are streamed; each one discards the candidates it moves.
  const auto gens = small_generating_set(S);
  std::vector<std::vector<std::uint32_t>> candidates;
  for (auto g : gens) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = 0; x < S.size(); ++x)
      if (S.element_order(x) == S.element_order(g) && S.class_sizes()[x] == S.class_sizes()[g]) c.push_back(x);
    candidates.push_back(std::move(c));
  }
  detail::search_isomorphisms(S, S, gens, candidates, [&](const std::vector<std::uint32_t>& a) {
    std::erase_if(alive, [&](const SubgroupRecord* sub) {
      for (auto g : sub->generators)
        if (!sub->members.test(a[g])) return true;
      return false;
    });
    return true;
  });
  std::vector<const SubgroupRecord*> keep = alive;
  std::stable_sort(keep.begin(), keep.end(),
                   [](const SubgroupRecord* a, const SubgroupRecord* b) { return a->members.count() < b->members.count(); });
  std::vector<PermGroup> out;
  for (const auto* k : keep) out.push_back(S.to_group(k->members));
  return out;
}

}  // namespace pgt
