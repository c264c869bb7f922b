#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

/// Built by normalizer ascent: repeatedly adjoin an element of N_G(Q) whose
/// coset mod Q has p-power order. Throws InvalidArgument when p does not divide |G|.
PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p);

struct SylowFamily {
  std::uint64_t prime = 0;
  std::vector<PermGroup> members;  // conjugates of the base by a transversal of N_G(P)
  std::size_t base = 0;
  PermGroup normalizer;            // N_G(members[base])

  const PermGroup& base_subgroup() const { return members[base]; }
};

/// Throws ResourceCapExceeded when the family exceeds the Sylow-family cap.
SylowFamily all_sylow_subgroups(const PermGroup& G, std::uint64_t p);

struct SylowIntersection {
  std::size_t first = 0;
  std::size_t second = 0;
  PermGroup subgroup;
};

/// P_i cap P_j for every pair i < j of distinct members.
std::vector<SylowIntersection> sylow_intersections(const SylowFamily& family);
std::vector<SylowIntersection> sylow_intersections(const PermGroup& G, std::uint64_t p);
/// Largest |P cap Q| over distinct Sylow pairs; 1 when the Sylow is unique.
/// Every pair is conjugate to one containing the base, so only those are scanned.
std::uint64_t max_intersection_order(const SylowFamily& family);
std::uint64_t max_intersection_order(const PermGroup& G, std::uint64_t p);

struct TameIntersectionRecord {
  PermGroup P;
  PermGroup Q;
  PermGroup D;  // P cap Q
  bool tame = false;
  PermGroup normalizer;  // N_G(D)
  bool normalizer_p_nilpotent = false;
  bool n_over_c_is_p_group = false;  // |N_G(D) : C_G(D)| is a power of p
};

/// Throws InvalidArgument when P or Q is not a Sylow subgroup of G.
TameIntersectionRecord is_tame_intersection(const PermGroup& G, const PermGroup& P, const PermGroup& Q);

/// Tame intersections P cap Q with L < P cap Q (and P cap Q < P when
/// strict_upper), P the family base and Q ranging over the family, including
/// Q = P. Deduplicated by P cap Q, keeping the first partner.
std::vector<TameIntersectionRecord> tame_intersections_between(const PermGroup& G, const SylowFamily& family,
                                                               const PermGroup& L, bool strict_upper);
std::vector<TameIntersectionRecord> tame_intersections_between(const PermGroup& G, std::uint64_t p,
                                                               const PermGroup& L, bool strict_upper);

struct WeakClosureResult {
  bool weakly_closed = true;
  std::optional<Permutation> conjugator;  // g with K^g <= P and K^g != K
  std::optional<PermGroup> conjugate;
};

/// K <= P is weakly closed in P with respect to G.
WeakClosureResult is_weakly_closed(const PermGroup& G, const PermGroup& P, const PermGroup& K);

/// Subgroups C with L <= C <= P invariant under every automorphism of P,
/// ascending by order.
std::vector<PermGroup> characteristic_subgroups_above(const PermGroup& P, const PermGroup& L);

}  // namespace pgt
