#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

/// Fixed-size bitset over the elements of a SmallGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<std::uint32_t> members() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Cayley-table view of a small permutation group. Element 0 is the identity.
class SmallGroup {
 public:
  /// Throws ResourceCapExceeded when |G| > cap.
  SmallGroup(const PermGroup& G, std::size_t cap);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(const Permutation& x) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t g) const { return mul(mul(inv(g), a), g); }
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }
  /// Indices of the PermGroup's generators.
  const std::vector<std::uint32_t>& generator_indices() const { return gens_; }
  /// Size of the conjugacy class of each element.
  const std::vector<std::uint32_t>& class_sizes() const { return class_sizes_; }

  ElementSet closure(const std::vector<std::uint32_t>& gens) const;
  ElementSet normal_closure(const std::vector<std::uint32_t>& gens) const;
  PermGroup to_group(const ElementSet& s) const;
  ElementSet to_set(const PermGroup& H) const;

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> class_sizes_;
};

struct SubgroupRecord {
  ElementSet members;
  std::vector<std::uint32_t> generators;
};

/// Every subgroup, by cyclic extension. Order: trivial first, then discovery order.
std::vector<SubgroupRecord> all_subgroups(const SmallGroup& G);
/// Every normal subgroup, as joins of normal closures of single elements.
std::vector<SubgroupRecord> normal_subgroups(const SmallGroup& G);

/// Greedy generating set: elements of largest order first.
std::vector<std::uint32_t> small_generating_set(const SmallGroup& G);

/// Every automorphism as a map on element indices. Throws ResourceCapExceeded
/// when the search exceeds the node cap.
std::vector<std::vector<std::uint32_t>> automorphism_tables(const SmallGroup& G);

}  // namespace pgt

namespace pgt::detail {

/// Backtracking over images of `gens` (drawn from `candidates[i]`), keeping
/// only partial assignments that extend to injective homomorphisms on the
/// generated subgroup. `found` receives the full element map of each
/// isomorphism A -> B and returns false to stop the search.
void search_isomorphisms(const SmallGroup& A, const SmallGroup& B, const std::vector<std::uint32_t>& gens,
                         const std::vector<std::vector<std::uint32_t>>& candidates,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& found);

}  // namespace pgt::detail
