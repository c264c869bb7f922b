#include "pgt/structure.hpp"

#include <functional>
#include <stdexcept>

#include "pgt/arith.hpp"
#include "pgt/cosets.hpp"
#include "pgt/errors.hpp"
#include "pgt/small_group.hpp"
#include "pgt/subgroups.hpp"
#include "pgt/sylow.hpp"

namespace pgt {

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::upper_central: return "upper_central";
    case SeriesKind::norm: return "norm";
    case SeriesKind::p_series: return "p_series";
  }
  return "unknown";
}

namespace {

void require_p_group(const PermGroup& P, std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw InvalidArgument(std::string(what) + ": p is not prime");
  if (!is_power_of(P.order(), p)) throw InvalidArgument(std::string(what) + ": group is not a p-group");
}

PermGroup upper_central_step(const PermGroup& G, const PermGroup& Zk) {
  const auto& gens = G.generators();
  return subgroup_from_filter(G, [&](const Permutation& x) {
    for (const auto& g : gens)
      if (!Zk.contains(commutator(x, g))) return false;
    return true;
  });
}

}  // namespace

PermGroup derived_subgroup(const PermGroup& G) { return commutator_subgroup(G, G, G); }

SeriesResult derived_series(const PermGroup& G) {
  SeriesResult r{SeriesKind::derived, {G}, 0, {}};
  for (;;) {
    PermGroup D = derived_subgroup(r.terms.back());
    if (D.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(D));
    ++r.length;
  }
  return r;
}

bool is_solvable(const PermGroup& G) { return derived_series(G).terms.back().is_trivial(); }

SeriesResult lower_central_series(const PermGroup& G) {
  SeriesResult r{SeriesKind::lower_central, {G}, 0, {}};
  for (;;) {
    PermGroup next = commutator_subgroup(r.terms.back(), G, G);
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
    ++r.length;
  }
  return r;
}

std::optional<unsigned> nilpotency_class(const PermGroup& G) {
  SeriesResult r = lower_central_series(G);
  if (!r.terms.back().is_trivial()) return std::nullopt;
  return r.length;
}

bool is_nilpotent(const PermGroup& G) { return nilpotency_class(G).has_value(); }

SeriesResult upper_central_series(const PermGroup& G) {
  SeriesResult r{SeriesKind::upper_central, {PermGroup::trivial(G.degree())}, 0, {}};
  while (r.terms.back().order() != G.order()) {
    PermGroup next = upper_central_step(G, r.terms.back());
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
    ++r.length;
  }
  return r;
}

PermGroup z_k(const PermGroup& G, unsigned k) {
  PermGroup Z = PermGroup::trivial(G.degree());
  for (unsigned i = 0; i < k && Z.order() != G.order(); ++i) {
    PermGroup next = upper_central_step(G, Z);
    if (next.order() == Z.order()) break;
    Z = std::move(next);
  }
  return Z;
}

PermGroup norm(const PermGroup& G) {
  SmallGroup S(G, limits().element_cap);
  const std::size_t n = S.size();
  std::vector<ElementSet> cyclic(n, ElementSet(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t y = 0;
    do {
      cyclic[x].set(y);
      y = S.mul(y, x);
    } while (y != 0);
  }
  std::vector<Permutation> members;
  for (std::uint32_t g = 0; g < n; ++g) {
    bool ok = true;
    for (std::uint32_t x = 1; x < n && ok; ++x) ok = cyclic[x].test(S.conj(x, g));
    if (ok) members.push_back(S.element(g));
  }
  PermGroup Zs = subgroup_generated_by(G.degree(), members);
  if (Zs.order() != members.size()) throw std::logic_error("norm: normalizer intersection is not a subgroup");
  if (!is_subgroup(Zs, center(G)) || !is_subgroup(z_k(G, 2), Zs))
    throw std::logic_error("norm: Z(G) <= Z*(G) <= Z_2(G) fails");
  return Zs;
}

SeriesResult norm_series(const PermGroup& G) {
  SeriesResult r{SeriesKind::norm, {PermGroup::trivial(G.degree())}, 0, {}};
  while (r.terms.back().order() != G.order()) {
    QuotientGroup Q(G, r.terms.back());
    PermGroup next = Q.preimage(norm(Q.image()));
    if (next.order() == r.terms.back().order()) break;
    r.terms.push_back(std::move(next));
    ++r.length;
  }
  return r;
}

unsigned norm_length(const PermGroup& G) {
  SeriesResult r = norm_series(G);
  if (r.terms.back().order() != G.order()) throw InvalidArgument("norm_length: norm series does not reach the group");
  return r.length;
}

bool is_dedekind(const PermGroup& G) { return norm(G).order() == G.order(); }

std::optional<std::uint64_t> p_group_prime(const PermGroup& G) {
  auto primes = prime_divisors(G.order());
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

bool is_p_group(const PermGroup& G, std::uint64_t p) { return is_power_of(G.order(), p); }

PermGroup frattini_p(const PermGroup& P, std::uint64_t p) {
  require_p_group(P, p, "frattini_p");
  std::vector<Permutation> gens = derived_subgroup(P).generators();
  P.for_each_element([&](const Permutation& x) { gens.push_back(x.pow(static_cast<std::int64_t>(p))); });
  return subgroup_generated_by(P.degree(), gens);
}

PermGroup frattini_by_maximal_subgroups(const PermGroup& G) {
  if (G.is_trivial()) return G;
  SmallGroup S(G, limits().subgroup_enumeration_cap);
  auto subs = all_subgroups(S);
  std::vector<const ElementSet*> proper;
  for (const auto& s : subs)
    if (s.members.count() < S.size()) proper.push_back(&s.members);
  ElementSet acc(S.size());
  bool first = true;
  for (const ElementSet* a : proper) {
    bool maximal = true;
    for (const ElementSet* b : proper)
      if (b != a && b->count() > a->count() && a->is_subset_of(*b)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    acc = first ? *a : (acc & *a);
    first = false;
  }
  return S.to_group(acc);
}

PermGroup omega(const PermGroup& P, std::uint64_t p, unsigned i) {
  require_p_group(P, p, "omega");
  const auto e = static_cast<std::int64_t>(ipow(p, i));
  return subgroup_generated_by_filter(P, [&](const Permutation& x) { return x.pow(e).is_identity(); });
}

PermGroup o_p(const PermGroup& G, std::uint64_t p) {
  if (G.order() % p != 0) return PermGroup::trivial(G.degree());
  return core(G, sylow_subgroup(G, p));
}

namespace {

// Join of <x^G> over class representatives x for which `accept(|<x^G>|)` holds.
PermGroup join_of_normal_closures(const PermGroup& G, const std::function<bool(std::uint64_t)>& accept) {
  PermGroup acc = PermGroup::trivial(G.degree());
  for (const auto& cls : conjugacy_classes(G)) {
    const Permutation& x = cls.representative;
    if (x.is_identity() || acc.contains(x)) continue;
    PermGroup N = normal_closure(G, {x});
    if (accept(N.order())) acc = join(acc, N);
  }
  return acc;
}

}  // namespace

PermGroup o_p_by_normal_closures(const PermGroup& G, std::uint64_t p) {
  return join_of_normal_closures(G, [p](std::uint64_t n) { return is_power_of(n, p); });
}

PermGroup o_p_prime(const PermGroup& G, std::uint64_t p) {
  return join_of_normal_closures(G, [p](std::uint64_t n) { return n % p != 0; });
}

PermGroup o_upper_p(const PermGroup& G, std::uint64_t p) {
  return subgroup_generated_by_filter(G, [p](const Permutation& x) { return x.order() % p != 0; });
}

PermGroup a_p(const PermGroup& G, std::uint64_t p) { return join(derived_subgroup(G), o_upper_p(G, p)); }

bool is_p_nilpotent(const PermGroup& G, std::uint64_t p) { return o_upper_p(G, p).order() % p != 0; }

SeriesResult p_series(const PermGroup& G, std::uint64_t p) {
  SeriesResult r{SeriesKind::p_series, {PermGroup::trivial(G.degree())}, 0, {}};
  bool p_prime_step = true;
  int stalled = 0;
  while (r.terms.back().order() != G.order() && stalled < 2) {
    QuotientGroup Q(G, r.terms.back());
    PermGroup X = p_prime_step ? o_p_prime(Q.image(), p) : o_p(Q.image(), p);
    if (X.is_trivial()) {
      ++stalled;
    } else {
      r.terms.push_back(Q.preimage(X));
      r.factor_kinds.push_back(p_prime_step ? 'q' : 'p');
      ++r.length;
      stalled = 0;
    }
    p_prime_step = !p_prime_step;
  }
  return r;
}

bool is_p_solvable(const PermGroup& G, std::uint64_t p) { return p_series(G, p).terms.back().order() == G.order(); }

unsigned p_length(const PermGroup& G, std::uint64_t p) {
  unsigned n = 0;
  for (char c : p_series(G, p).factor_kinds) n += c == 'p';
  return n;
}

unsigned p_prime_length(const PermGroup& G, std::uint64_t p) {
  const std::string kinds = p_series(G, p).factor_kinds;
  const auto first = kinds.find('p');
  const auto last = kinds.rfind('p');
  if (first == std::string::npos) return 0;
  unsigned n = 0;
  for (auto i = first; i < last; ++i) n += kinds[i] == 'q';
  return n;
}

Permutation iterated_commutator(const Permutation& u, const Permutation& g, unsigned k) {
  if (k == 0) throw InvalidArgument("iterated_commutator: k must be at least 1");
  Permutation c = commutator(u, g);
  for (unsigned i = 1; i < k; ++i) c = commutator(c, g);
  return c;
}

bool lemma31_condition_a(const PermGroup& P, const PermGroup& Z, std::uint64_t p) {
  require_p_group(P, p, "lemma31_condition_a");
  if (!is_subgroup(P, Z)) throw InvalidArgument("lemma31_condition_a: Z is not a subgroup of P");
  const PermGroup F = frattini_p(Z, p);
  const auto zs = Z.elements();
  bool ok = true;
  P.for_each_element([&](const Permutation& g) {
    if (!ok) return;
    for (const auto& z : zs)
      if (!F.contains(iterated_commutator(z, g, static_cast<unsigned>(p - 1)))) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool is_pi_central_of_height(const PermGroup& P, std::uint64_t p, unsigned i, unsigned k, OrderReading reading) {
  require_p_group(P, p, "is_pi_central_of_height");
  const std::uint64_t target = ipow(p, i);
  const PermGroup Zk = z_k(P, k);
  bool ok = true;
  P.for_each_element([&](const Permutation& x) {
    if (!ok) return;
    const std::uint64_t o = x.order();
    const bool selected = reading == OrderReading::strict ? o == target : target % o == 0;
    if (selected && !Zk.contains(x)) ok = false;
  });
  return ok;
}

}  // namespace pgt
