#include "pgt/subgroups.hpp"

#include <unordered_set>

#include "pgt/errors.hpp"

namespace pgt {

namespace {

void require_same_degree(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) throw InvalidArgument("groups act on different degrees");
}

}  // namespace

bool is_subgroup(const PermGroup& G, const PermGroup& H) {
  require_same_degree(G, H);
  if (H.order() > G.order() || G.order() % H.order() != 0) return false;
  for (const auto& h : H.generators())
    if (!G.contains(h)) return false;
  return true;
}

bool same_group(const PermGroup& A, const PermGroup& B) {
  return A.degree() == B.degree() && A.order() == B.order() && is_subgroup(A, B);
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  if (!is_subgroup(G, H)) return false;
  for (const auto& g : G.generators())
    for (const auto& h : H.generators())
      if (!H.contains(h.conjugate_by(g))) return false;
  return true;
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

PermGroup subgroup_generated_by(std::size_t degree, const std::vector<Permutation>& elements) {
  PermGroup K = PermGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (const auto& x : elements) {
    if (K.contains(x)) continue;
    gens.push_back(x);
    K = PermGroup(degree, gens);
  }
  return K;
}

PermGroup subgroup_generated_by_filter(const PermGroup& G, const std::function<bool(const Permutation&)>& keep) {
  PermGroup K = PermGroup::trivial(G.degree());
  std::vector<Permutation> gens;
  G.for_each_element([&](const Permutation& x) {
    if (K.order() == G.order() || K.contains(x) || !keep(x)) return;
    gens.push_back(x);
    K = PermGroup(G.degree(), gens);
  });
  return K;
}

PermGroup subgroup_from_filter(const PermGroup& G, const std::function<bool(const Permutation&)>& keep) {
  return subgroup_generated_by_filter(G, keep);
}

PermGroup cyclic_subgroup(const Permutation& x) { return PermGroup(x.degree(), {x}); }

PermGroup conjugate_subgroup(const PermGroup& H, const Permutation& g) {
  if (g.degree() != H.degree()) throw InvalidArgument("conjugating element has wrong degree");
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(h.conjugate_by(g));
  return PermGroup(H.degree(), std::move(gens));
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  require_same_degree(G, H);
  const auto& hg = H.generators();
  return subgroup_from_filter(G, [&](const Permutation& g) {
    for (const auto& h : hg)
      if (!H.contains(h.conjugate_by(g))) return false;
    return true;
  });
}

PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
  require_same_degree(G, H);
  const auto& hg = H.generators();
  return subgroup_from_filter(G, [&](const Permutation& g) {
    for (const auto& h : hg)
      if (h * g != g * h) return false;
    return true;
  });
}

PermGroup center(const PermGroup& G) { return centralizer(G, G); }

PermGroup intersection(const PermGroup& A, const PermGroup& B) {
  require_same_degree(A, B);
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  if (is_subgroup(large, small)) return small;
  return subgroup_from_filter(small, [&](const Permutation& x) { return large.contains(x); });
}

PermGroup join(const PermGroup& A, const PermGroup& B) {
  require_same_degree(A, B);
  return A.with_generators(B.generators());
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& S) {
  std::vector<Permutation> gens;
  for (const auto& s : S) {
    if (s.degree() != G.degree()) throw InvalidArgument("normal_closure: element has wrong degree");
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup K(G.degree(), gens);
  gens = K.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : G.generators()) {
      Permutation c = gens[i].conjugate_by(g);
      if (K.contains(c)) continue;
      gens.push_back(std::move(c));
      K = PermGroup(G.degree(), gens);
    }
  }
  return K;
}

PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B, const PermGroup& ambient) {
  require_same_degree(A, B);
  require_same_degree(A, ambient);
  std::vector<Permutation> comms;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(join(A, B), comms);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& G) {
  std::vector<ConjugacyClass> classes;
  std::unordered_set<Permutation> seen;
  G.for_each_element([&](const Permutation& x) {
    if (seen.count(x)) return;
    ConjugacyClass cls{x, {x}};
    seen.insert(x);
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (const auto& g : G.generators()) {
        Permutation y = cls.members[i].conjugate_by(g);
        if (seen.insert(y).second) cls.members.push_back(std::move(y));
      }
    }
    classes.push_back(std::move(cls));
  });
  return classes;
}

}  // namespace pgt
