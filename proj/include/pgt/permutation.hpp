#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgt {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1} stored as its image array.
///
/// Products act on the right: (a * b) applies a first, then b, so that
/// conjugation reads x^g = g^-1 * x * g and [a, b] = a^-1 b^-1 a b.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Validates that `images` is a bijection; throws InvalidArgument otherwise.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point image(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  /// Order of the element in the symmetric group.
  std::uint64_t order() const;
  /// Smallest point moved, or degree() when the permutation is the identity.
  Point first_moved_point() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);

  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::string to_cycle_string() const;
  std::string to_array_string() const;

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace pgt

template <>
struct std::hash<pgt::Permutation> {
  std::size_t operator()(const pgt::Permutation& p) const { return p.hash(); }
};
