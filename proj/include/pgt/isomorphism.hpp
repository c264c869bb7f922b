#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

/// A homomorphism given by the images of the generators of `from`.
struct GeneratorMap {
  PermGroup from;
  PermGroup to;
  std::vector<Permutation> images;  // one per generator of `from`
};

/// Elementary divisors (prime powers, ascending) of an abelian group.
/// Throws InvalidArgument when G is not abelian.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& G);

/// Isomorphism invariants used to reject non-isomorphic pairs early.
struct GroupFingerprint {
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_class_profile;  // sorted (element order, class size)
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<std::uint64_t> abelianization;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PermGroup& G);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<GeneratorMap> witness;
};

/// Decides A ~= B (|A|, |B| within the isomorphism cap) by fingerprint, then
/// backtracking over generator images validated against the full Cayley table.
IsomorphismResult find_isomorphism(const PermGroup& A, const PermGroup& B);
bool is_isomorphic(const PermGroup& A, const PermGroup& B);

/// Every automorphism of P (|P| within the automorphism cap).
std::vector<GeneratorMap> automorphism_group(const PermGroup& P);

/// Applies a generator map to an element of `from` by expressing it as a word.
Permutation apply(const GeneratorMap& map, const Permutation& x);

}  // namespace pgt
