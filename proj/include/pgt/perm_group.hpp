#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "pgt/permutation.hpp"

namespace pgt {

/// One level of a stabilizer chain: the basic orbit of `base_point` under the
/// stabilizer of all earlier base points, with a coset representative for
/// every orbit point.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> rep_index;  // indexed by point; -1 when outside the orbit
  std::vector<Permutation> reps;        // reps[k] maps base_point to orbit[k]
  std::vector<Permutation> rep_inverses;

  bool in_orbit(Point p) const { return rep_index[p] >= 0; }
};

/// Finitely generated permutation group with a deterministic stabilizer chain.
///
/// Immutable after construction; copies share the chain.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();
  /// Builds the chain with deterministic Schreier-Sims. Throws InvalidArgument
  /// when a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  Permutation identity() const { return Permutation(degree()); }

  /// Membership by sifting through the chain.
  bool contains(const Permutation& x) const;
  /// Residue of sifting x through the chain; identity iff x is a member.
  Permutation sift(const Permutation& x) const;

  const std::vector<ChainLevel>& chain() const;
  std::vector<Point> base() const;

  /// Visits every element exactly once in a fixed order. Throws
  /// ResourceCapExceeded when the order exceeds the element cap.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> elements() const;

  /// Adds generators; the result is a new group.
  PermGroup with_generators(const std::vector<Permutation>& extra) const;

  struct Data;

 private:
  std::shared_ptr<const Data> data_;
};

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators);

}  // namespace pgt
