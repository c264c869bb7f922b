#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

enum class SeriesKind { derived, lower_central, upper_central, norm, p_series };

std::string to_string(SeriesKind kind);

struct SeriesResult {
  SeriesKind kind = SeriesKind::derived;
  /// Descending for derived and lower central, ascending otherwise. Every
  /// term differs from its predecessor except possibly a single stalled tail.
  std::vector<PermGroup> terms;
  /// Number of strict steps taken.
  unsigned length = 0;
  /// For the p-series only: 'p' or 'q' (p') for each step terms[i] -> terms[i+1].
  std::string factor_kinds;
};

PermGroup derived_subgroup(const PermGroup& G);
SeriesResult derived_series(const PermGroup& G);
bool is_solvable(const PermGroup& G);

SeriesResult lower_central_series(const PermGroup& G);
/// Nilpotency class; nullopt when G is not nilpotent. The trivial group has class 0.
std::optional<unsigned> nilpotency_class(const PermGroup& G);
bool is_nilpotent(const PermGroup& G);

/// Z_0 = 1 <= Z_1 <= ... until stable.
SeriesResult upper_central_series(const PermGroup& G);
PermGroup z_k(const PermGroup& G, unsigned k);

/// Z*(G): intersection of N_G(<x>) over x in G. Checks Z(G) <= Z*(G) <= Z_2(G).
PermGroup norm(const PermGroup& G);
/// Z*_0 = 1 and Z*_i / Z*_{i-1} = Z*(G / Z*_{i-1}), until stable.
SeriesResult norm_series(const PermGroup& G);
/// Least i with Z*_i(G) = G. Throws InvalidArgument when the series stalls below G.
unsigned norm_length(const PermGroup& G);
bool is_dedekind(const PermGroup& G);

/// Prime p when |G| is a nontrivial power of p; nullopt otherwise.
std::optional<std::uint64_t> p_group_prime(const PermGroup& G);
bool is_p_group(const PermGroup& G, std::uint64_t p);

/// Phi(P) = P' P^p. Throws InvalidArgument when P is not a p-group.
PermGroup frattini_p(const PermGroup& P, std::uint64_t p);
/// Intersection of the maximal subgroups, found by full subgroup enumeration.
PermGroup frattini_by_maximal_subgroups(const PermGroup& G);
/// <x in P : x^(p^i) = 1>. Throws InvalidArgument when P is not a p-group.
PermGroup omega(const PermGroup& P, std::uint64_t p, unsigned i = 1);

/// O_p(G) as the intersection of all Sylow p-subgroups (core of one of them).
PermGroup o_p(const PermGroup& G, std::uint64_t p);
/// O_p(G) as the join of the normal closures <x^G> that are p-groups.
PermGroup o_p_by_normal_closures(const PermGroup& G, std::uint64_t p);
/// Join of the normal closures <x^G> that are p'-groups.
PermGroup o_p_prime(const PermGroup& G, std::uint64_t p);
/// O^p(G): generated by the p'-elements.
PermGroup o_upper_p(const PermGroup& G, std::uint64_t p);
/// A^p(G) = G' O^p(G).
PermGroup a_p(const PermGroup& G, std::uint64_t p);

bool is_p_nilpotent(const PermGroup& G, std::uint64_t p);

/// Upper p-series 1 <= O_p' <= O_p',p <= ... Trivial factors are omitted;
/// the series stops when it reaches G or stalls.
SeriesResult p_series(const PermGroup& G, std::uint64_t p);
bool is_p_solvable(const PermGroup& G, std::uint64_t p);
/// Number of p-factors in the upper p-series.
unsigned p_length(const PermGroup& G, std::uint64_t p);
/// Number of p'-factors strictly between the first and last p-factor.
unsigned p_prime_length(const PermGroup& G, std::uint64_t p);

/// [u, g, ..., g] with k copies of g; [u, g] = u^-1 g^-1 u g.
Permutation iterated_commutator(const Permutation& u, const Permutation& g, unsigned k);

/// [z, g, ..., g]_{p-1} lies in Phi(Z) for every z in Z and g in P.
bool lemma31_condition_a(const PermGroup& P, const PermGroup& Z, std::uint64_t p);

enum class OrderReading { strict, dividing };

/// Every x in P with |x| = p^i (or |x| dividing p^i) lies in Z_k(P).
bool is_pi_central_of_height(const PermGroup& P, std::uint64_t p, unsigned i, unsigned k,
                             OrderReading reading = OrderReading::strict);

}  // namespace pgt
