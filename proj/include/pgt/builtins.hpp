#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

PermGroup symmetric(unsigned n);
PermGroup alternating(unsigned n);
PermGroup cyclic(unsigned n);
/// Dihedral group of order `order` (= 2n), acting on n points for n >= 3.
PermGroup dihedral(unsigned order);
/// Generalized quaternion group of order `order` = 2^k >= 8 in its right regular representation.
PermGroup generalized_quaternion(unsigned order);
/// (Z_p)^k acting on k disjoint blocks of p points.
PermGroup elementary_abelian(unsigned p, unsigned k);
PermGroup direct_product(const PermGroup& A, const PermGroup& B);
/// Imprimitive wreath product: copies of `base` on the blocks permuted by `top`.
PermGroup wreath_product(const PermGroup& base, const PermGroup& top);
/// Z_p wr Z_p on p^2 points; order p^(p+1).
PermGroup wreath_cyclic(unsigned p);
/// Unitriangular 3x3 matrices over F_p (order p^3, exponent p for odd p) on p^2 points.
PermGroup heisenberg(unsigned p);
/// PSL(2, q) for an odd prime q, via Moebius maps on the q+1 points of the projective line.
PermGroup psl2(unsigned q);
/// SL(2, q) or GL(2, q), q prime, acting on the nonzero vectors of F_q^2.
PermGroup sl2(unsigned q);
PermGroup gl2(unsigned q);
/// {x -> a x + b} over F_p with a ranging over the subgroup of order d of F_p^*.
PermGroup affine(unsigned p, unsigned d);

/// Builds a group from a label such as "S4", "A5", "C6", "D8", "Q16", "E2^3",
/// "C3wrC3", "PSL2_17", "SL2_3", "GL2_3", "AGL1_5", "F21" or a product "S3xC2".
/// Throws InvalidArgument for unknown labels or invalid parameters.
PermGroup builtin_group(std::string_view label);

/// Label syntax accepted by builtin_group, one line per family.
std::vector<std::string> builtin_families();

}  // namespace pgt
