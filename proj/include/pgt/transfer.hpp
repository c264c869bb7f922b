#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgt/cosets.hpp"
#include "pgt/perm_group.hpp"

namespace pgt {

/// A value of the transfer map: an element of H read modulo H'.
struct TransferResult {
  PermGroup target;   // H
  PermGroup modulus;  // H'
  Permutation value;

  /// value * other.value^-1 lies in H'.
  bool equivalent(const TransferResult& other) const;
};

/// V(g) = prod over t in T (in list order) of t g (t.g)^-1; lies in T.subgroup().
Permutation pretransfer(const Transversal& T, const Permutation& g);

/// Transfer G -> H/H' evaluated with the canonical transversal.
TransferResult transfer(const PermGroup& G, const PermGroup& H, const Permutation& g);
/// Transfer evaluated with a caller-supplied transversal.
TransferResult transfer(const Transversal& T, const Permutation& g);

/// V(g) == W(U(g)) mod H' for V: G -> H, U: G -> K, W: K -> H.
bool check_transitivity(const PermGroup& G, const PermGroup& K, const PermGroup& H, const Permutation& g);
bool check_transitivity(const Transversal& GH, const Transversal& GK, const Transversal& KH, const Permutation& g);

/// V(k) == prod over x in X of x W_x(k) x^-1 mod H', with X the (H, K)
/// double coset representatives and W_x: K -> K cap H^x.
bool check_mackey(const PermGroup& G, const PermGroup& H, const PermGroup& K, const Permutation& k);

struct TransferEvaluation {
  std::vector<std::pair<Permutation, std::uint64_t>> orbits;  // (s, n_s) per <u>-orbit on the transversal
  Permutation product;                                        // prod of s u^{n_s} s^-1
  bool lengths_sum_to_index = false;
  bool terms_in_subgroup = false;
  bool congruent_to_pretransfer = false;  // mod R'

  bool ok() const { return lengths_sum_to_index && terms_in_subgroup && congruent_to_pretransfer; }
};

TransferEvaluation transfer_evaluation(const PermGroup& P, const PermGroup& R, const Permutation& u);

/// P cap G'.
PermGroup focal_subgroup(const PermGroup& G, const PermGroup& P);

struct ControlReport {
  PermGroup G;
  PermGroup N;
  std::uint64_t prime = 0;
  PermGroup sylow;     // Sylow p-subgroup of N, Sylow in G as well
  PermGroup focal_G;   // P cap G'
  PermGroup focal_N;   // P cap N'
  bool controls = false;
  std::vector<std::uint64_t> quotient_invariants_G;  // G / A^p(G)
  std::vector<std::uint64_t> quotient_invariants_N;  // N / A^p(N)

  /// The quotient-invariant test gives the same answer as the focal test.
  bool consistent() const { return controls == (quotient_invariants_G == quotient_invariants_N); }
};

/// Throws InvalidArgument when N is not a subgroup of G or p divides |G:N|.
ControlReport controls_p_transfer(const PermGroup& G, const PermGroup& N, std::uint64_t p);

struct Lemma23Step {
  Permutation u;  // element of P outside M
  Permutation x;  // nonidentity (N, P) double coset representative
  PermGroup R;    // P cap N^x
  PermGroup Q;    // P cap M^x
  Permutation w;  // W(u) for the pretransfer P -> R
  bool verified = false;  // W(u) in R \ Q, R < P, |R : Q| = p
};

struct Lemma23Witness {
  bool controls = false;
  /// Index-p normal subgroups M of N containing V(G); the first is used below.
  std::vector<PermGroup> candidates;
  std::vector<Permutation> X;
  std::vector<Lemma23Step> steps;  // one per u in P \ M
  std::string failure;             // empty when every part was found and verified

  bool verified() const { return controls || failure.empty(); }
};

/// Requires N_G(P) <= N for the Sylow P of N and p not dividing |G:N|.
Lemma23Witness lemma23_witness(const PermGroup& G, const PermGroup& N, std::uint64_t p);

struct TateComparison {
  bool abelian_quotients_isomorphic = false;  // N/A^p(N) ~= G/A^p(G)
  bool p_quotients_isomorphic = false;        // N/O^p(N) ~= G/O^p(G)
  bool agree() const { return abelian_quotients_isomorphic == p_quotients_isomorphic; }
};

TateComparison tate_comparison(const PermGroup& G, const PermGroup& N, std::uint64_t p);
bool tate_agreement(const PermGroup& G, const PermGroup& N, std::uint64_t p);

}  // namespace pgt
