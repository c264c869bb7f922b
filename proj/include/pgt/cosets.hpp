#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

/// Right-coset representatives {t} for H in G, one per coset Ht.
class Transversal {
 public:
  /// Validates that `reps` lie in G, hit every right coset exactly once, and
  /// (when required) start with the identity.
  Transversal(PermGroup parent, PermGroup subgroup, std::vector<Permutation> reps);

  const PermGroup& parent() const;
  const PermGroup& subgroup() const;
  const std::vector<Permutation>& reps() const;
  std::size_t size() const { return reps().size(); }

  /// Index of the representative r with g r^-1 in H.
  std::size_t coset_index(const Permutation& g) const;
  const Permutation& coset_rep(const Permutation& g) const { return reps()[coset_index(g)]; }
  /// Position of t in the representative list; throws InvalidArgument if t is not listed.
  std::size_t index_of_rep(const Permutation& t) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Canonical transversal: the lexicographically least element of each coset,
/// sorted, so the identity comes first.
Transversal right_transversal(const PermGroup& G, const PermGroup& H);

/// t.g: the representative of the coset H t g.
Permutation dot_action(const Transversal& T, const Permutation& t, const Permutation& g);

/// Representatives of the (H, K) double cosets H x K, identity first.
std::vector<Permutation> double_coset_reps(const PermGroup& G, const PermGroup& H, const PermGroup& K);

/// Core_G(H): intersection of the conjugates H^t over a right transversal.
PermGroup core(const PermGroup& G, const PermGroup& H);

/// G/N realised as G acting on the right cosets of N.
class QuotientGroup {
 public:
  QuotientGroup(PermGroup source, PermGroup kernel);

  const PermGroup& source() const { return source_; }
  const PermGroup& kernel() const { return kernel_; }
  const PermGroup& image() const { return image_; }

  /// Image of a source element.
  Permutation project(const Permutation& g) const;
  /// Some source element mapping to y.
  Permutation lift(const Permutation& y) const;
  /// Image of a subgroup of the source.
  PermGroup project_subgroup(const PermGroup& H) const;
  /// Full inverse image of a subgroup of the image.
  PermGroup preimage(const PermGroup& sub) const;

 private:
  PermGroup source_;
  PermGroup kernel_;
  PermGroup image_;
  std::shared_ptr<const Transversal> cosets_;  // null when the kernel is trivial
};

/// Throws InvalidArgument when N is not normal in G.
QuotientGroup quotient_group(const PermGroup& G, const PermGroup& N);

/// H is a maximal subgroup of G. Throws InvalidArgument when H = G.
bool is_maximal(const PermGroup& G, const PermGroup& H);

}  // namespace pgt
