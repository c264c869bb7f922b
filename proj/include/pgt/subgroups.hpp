#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

/// H <= G, tested generator by generator.
bool is_subgroup(const PermGroup& G, const PermGroup& H);
/// A and B have the same elements.
bool same_group(const PermGroup& A, const PermGroup& B);
/// H is a normal subgroup of G.
bool is_normal(const PermGroup& G, const PermGroup& H);
bool is_abelian(const PermGroup& G);

/// The subgroup generated by a set of elements, adding only those not
/// already generated (at most log2 of the final order additions).
PermGroup subgroup_generated_by(std::size_t degree, const std::vector<Permutation>& elements);
/// The subgroup of G generated by all elements satisfying `keep`.
PermGroup subgroup_generated_by_filter(const PermGroup& G, const std::function<bool(const Permutation&)>& keep);
/// The subset of G satisfying `keep`, which must already be a subgroup.
PermGroup subgroup_from_filter(const PermGroup& G, const std::function<bool(const Permutation&)>& keep);

PermGroup cyclic_subgroup(const Permutation& x);

/// H^g = <g^-1 h g : h a generator of H>.
PermGroup conjugate_subgroup(const PermGroup& H, const Permutation& g);

/// N_G(H) by element scan.
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
/// C_G(H) by element scan.
PermGroup centralizer(const PermGroup& G, const PermGroup& H);
PermGroup center(const PermGroup& G);

/// A intersect B: enumerate the smaller group, filter by membership in the larger.
PermGroup intersection(const PermGroup& A, const PermGroup& B);
PermGroup join(const PermGroup& A, const PermGroup& B);

/// Smallest normal subgroup of G containing S.
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& S);
/// [A, B]: normal closure in <A, B> of the commutators of generator pairs.
PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B, const PermGroup& ambient);

struct ConjugacyClass {
  Permutation representative;
  std::vector<Permutation> members;
};
/// Classes in order of first appearance in G's element enumeration.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& G);

}  // namespace pgt
