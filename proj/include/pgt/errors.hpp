#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgt {

/// Malformed input: bad image arrays, degree mismatches, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed one of the configured resource caps.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource caps shared by every enumeration-based algorithm in the library.
struct Limits {
  std::size_t element_cap = 250000;
  std::size_t isomorphism_cap = 512;
  std::size_t automorphism_cap = 256;
  std::size_t subgroup_enumeration_cap = 256;
  std::size_t sylow_family_cap = 10000;
  // Backtracking nodes allowed per isomorphism/automorphism search.
  std::size_t search_node_cap = 20000000;
};

/// Current caps. Reads are thread-safe; set_limits must not race with running work.
const Limits& limits();
void set_limits(const Limits& l);

/// Applies PGT_ELEMENT_CAP from the environment, if set, on top of `base`.
Limits limits_from_environment(Limits base = {});

void require_within_cap(std::size_t count, std::size_t cap, const char* what);

}  // namespace pgt
