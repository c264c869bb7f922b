#include "pgt/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "pgt/arith.hpp"
#include "pgt/errors.hpp"
#include "pgt/small_group.hpp"
#include "pgt/subgroups.hpp"

namespace pgt {

namespace {

// Elementary divisors of an abelian group A from the counts
// |{x : x^(p^k) = 1}| = p^(sum_i min(e_i, k)).
std::vector<std::uint64_t> invariants_from_counts(
    std::uint64_t order, const std::function<std::uint64_t(std::uint64_t p, std::uint64_t pk)>& omega_count) {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(order)) {
    const std::uint64_t full = p_part(order, p);
    std::vector<unsigned> rank;  // rank[k-1] = #{i : e_i >= k}
    unsigned prev = 0;
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      unsigned logc = log_p(omega_count(p, pk), p);
      rank.push_back(logc - prev);
      prev = logc;
      if (ipow(p, logc) == full) break;
    }
    for (std::size_t k = 0; k < rank.size(); ++k) {
      unsigned next = k + 1 < rank.size() ? rank[k + 1] : 0;
      for (unsigned c = 0; c < rank[k] - next; ++c) out.push_back(ipow(p, static_cast<unsigned>(k + 1)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> abelianization_invariants(const SmallGroup& S) {
  std::vector<std::uint32_t> comms;
  for (auto a : S.generator_indices())
    for (auto b : S.generator_indices()) {
      auto c = S.mul(S.mul(S.inv(a), S.inv(b)), S.mul(a, b));
      if (c) comms.push_back(c);
    }
  ElementSet derived = S.normal_closure(comms);
  const std::uint64_t dsize = derived.count();
  const std::uint64_t qorder = S.size() / dsize;
  return invariants_from_counts(qorder, [&](std::uint64_t, std::uint64_t pk) {
    std::uint64_t c = 0;
    for (std::uint32_t x = 0; x < S.size(); ++x)
      if (derived.test(S.power(x, pk))) ++c;
    return c / dsize;
  });
}

GroupFingerprint fingerprint_of(const SmallGroup& S) {
  GroupFingerprint f;
  f.order = S.size();
  for (std::uint32_t x = 0; x < S.size(); ++x) {
    f.order_class_profile.emplace_back(S.element_order(x), S.class_sizes()[x]);
    if (S.class_sizes()[x] == 1) ++f.center_order;
  }
  std::sort(f.order_class_profile.begin(), f.order_class_profile.end());
  f.abelianization = abelianization_invariants(S);
  std::uint64_t ab = 1;
  for (auto v : f.abelianization) ab *= v;
  f.derived_order = f.order / ab;
  return f;
}

GeneratorMap to_generator_map(const SmallGroup& A, const SmallGroup& B, const std::vector<std::uint32_t>& gens,
                              const std::vector<std::uint32_t>& map) {
  std::vector<Permutation> src, img;
  for (auto g : gens) {
    src.push_back(A.element(g));
    img.push_back(B.element(map[g]));
  }
  return GeneratorMap{PermGroup(A.group().degree(), src), B.group(), std::move(img)};
}

}  // namespace

std::vector<std::uint64_t> abelian_invariants(const PermGroup& G) {
  if (!is_abelian(G)) throw InvalidArgument("abelian_invariants: group is not abelian");
  std::map<std::uint64_t, std::uint64_t> order_counts;
  G.for_each_element([&](const Permutation& x) { ++order_counts[x.order()]; });
  return invariants_from_counts(G.order(), [&](std::uint64_t, std::uint64_t pk) {
    std::uint64_t c = 0;
    for (auto [ord, cnt] : order_counts)
      if (pk % ord == 0) c += cnt;
    return c;
  });
}

GroupFingerprint fingerprint(const PermGroup& G) {
  return fingerprint_of(SmallGroup(G, limits().isomorphism_cap));
}

IsomorphismResult find_isomorphism(const PermGroup& A, const PermGroup& B) {
  const std::size_t cap = limits().isomorphism_cap;
  require_within_cap(A.order(), cap, "isomorphism test");
  require_within_cap(B.order(), cap, "isomorphism test");
  if (A.order() != B.order()) return {};
  SmallGroup SA(A, cap), SB(B, cap);
  if (!(fingerprint_of(SA) == fingerprint_of(SB))) return {};
  auto gens = small_generating_set(SA);
  std::vector<std::vector<std::uint32_t>> candidates;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto g = gens[i];
    std::vector<std::uint32_t> c;
    std::vector<bool> class_taken(SB.size(), false);
    for (std::uint32_t x = 0; x < SB.size(); ++x) {
      if (SB.element_order(x) != SA.element_order(g) || SB.class_sizes()[x] != SA.class_sizes()[g]) continue;
      if (i == 0) {
        // The first image only matters up to conjugacy in B.
        if (class_taken[x]) continue;
        for (std::uint32_t y = 0; y < SB.size(); ++y) class_taken[SB.conj(x, y)] = true;
      }
      c.push_back(x);
    }
    candidates.push_back(std::move(c));
  }
  IsomorphismResult result;
  detail::search_isomorphisms(SA, SB, gens, candidates, [&](const std::vector<std::uint32_t>& map) {
    result.isomorphic = true;
    result.witness = to_generator_map(SA, SB, gens, map);
    return false;
  });
  return result;
}

bool is_isomorphic(const PermGroup& A, const PermGroup& B) { return find_isomorphism(A, B).isomorphic; }

std::vector<GeneratorMap> automorphism_group(const PermGroup& P) {
  SmallGroup S(P, limits().automorphism_cap);
  auto gens = small_generating_set(S);
  std::vector<GeneratorMap> out;
  for (const auto& map : automorphism_tables(S)) out.push_back(to_generator_map(S, S, gens, map));
  return out;
}

Permutation apply(const GeneratorMap& map, const Permutation& x) {
  // Breadth-first words over the generators of `from`.
  const auto& gens = map.from.generators();
  if (gens.size() != map.images.size()) throw InvalidArgument("generator map: image count mismatch");
  std::unordered_map<Permutation, Permutation> image;
  std::vector<Permutation> queue{map.from.identity()};
  image.emplace(queue[0], map.to.identity());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    if (queue[q] == x) return image.at(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation next = queue[q] * gens[i];
      if (image.count(next)) continue;
      image.emplace(next, image.at(queue[q]) * map.images[i]);
      queue.push_back(std::move(next));
    }
  }
  throw InvalidArgument("generator map: element is not in the source group");
}

}  // namespace pgt
