#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pgt/builtins.hpp"
#include "pgt/cosets.hpp"
#include "pgt/subgroups.hpp"

using pgt::Permutation;
using pgt::PermGroup;

namespace {

std::set<Permutation> as_set(const PermGroup& G) {
  auto e = G.elements();
  return {e.begin(), e.end()};
}

PermGroup S4() { return pgt::symmetric(4); }
PermGroup D8() { return PermGroup(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); }
PermGroup V4() { return PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")}); }
PermGroup A4() { return pgt::alternating(4); }

}  // namespace

TEST_CASE("is_subgroup") {
  CHECK(pgt::is_subgroup(S4(), D8()));
  CHECK_FALSE(pgt::is_subgroup(D8(), S4()));
  CHECK(pgt::is_subgroup(S4(), S4()));
}

TEST_CASE("conjugate_subgroup") {
  PermGroup H(3, {Permutation::from_cycles(3, "(0 1)")});
  PermGroup K = pgt::conjugate_subgroup(H, Permutation::from_cycles(3, "(1 2)"));
  CHECK(pgt::same_group(K, PermGroup(3, {Permutation::from_cycles(3, "(0 2)")})));
  CHECK(pgt::same_group(pgt::conjugate_subgroup(D8(), Permutation(4)), D8()));
  for (const auto& g : S4().elements()) CHECK(pgt::same_group(pgt::conjugate_subgroup(V4(), g), V4()));
}

TEST_CASE("normalizer matches the element-scan oracle") {
  auto s4 = as_set(S4());
  CHECK(as_set(pgt::normalizer(S4(), D8())) == oracle::normalizer(s4, as_set(D8())));
  CHECK(pgt::same_group(pgt::normalizer(S4(), D8()), D8()));
  CHECK(pgt::same_group(pgt::normalizer(S4(), V4()), S4()));
  CHECK(pgt::same_group(pgt::normalizer(S4(), S4()), S4()));
}

TEST_CASE("centralizer") {
  auto s4 = as_set(S4());
  CHECK(as_set(pgt::centralizer(S4(), V4())) == oracle::centralizer(s4, as_set(V4())));
  CHECK(pgt::same_group(pgt::centralizer(S4(), V4()), V4()));
  CHECK(pgt::same_group(pgt::centralizer(S4(), PermGroup::trivial(4)), S4()));
  PermGroup r(4, {{1, 2, 3, 0}});
  CHECK(pgt::same_group(pgt::centralizer(D8(), r), r));
}

TEST_CASE("core") {
  CHECK(pgt::same_group(pgt::core(S4(), D8()), V4()));
  CHECK(pgt::same_group(pgt::core(S4(), S4()), S4()));
  CHECK(pgt::core(pgt::symmetric(3), PermGroup(3, {Permutation::from_cycles(3, "(0 1)")})).is_trivial());
}

TEST_CASE("intersection") {
  PermGroup P = D8();
  PermGroup Q = pgt::conjugate_subgroup(P, Permutation::from_cycles(4, "(1 2)"));
  REQUIRE_FALSE(pgt::same_group(P, Q));
  PermGroup I = pgt::intersection(P, Q);
  CHECK(as_set(I) == oracle::intersect(as_set(P), as_set(Q)));
  CHECK(I.order() == 4);
  CHECK(P.order() / I.order() == 2);
  CHECK(pgt::same_group(pgt::intersection(P, P), P));
  PermGroup T1(4, {Permutation::from_cycles(4, "(0 1 2)")}), T2(4, {Permutation::from_cycles(4, "(1 2 3)")});
  CHECK(pgt::intersection(T1, T2).is_trivial());
}

TEST_CASE("join") {
  PermGroup P = D8();
  PermGroup Q = pgt::conjugate_subgroup(P, Permutation::from_cycles(4, "(1 2)"));
  CHECK(pgt::join(P, Q).order() == 24);
  CHECK(pgt::same_group(pgt::join(P, PermGroup::trivial(4)), P));
  PermGroup a(3, {Permutation::from_cycles(3, "(0 1)")}), b(3, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(pgt::join(a, b).order() == 6);
}

TEST_CASE("normal_closure") {
  auto s4 = as_set(S4());
  Permutation x = Permutation::from_cycles(4, "(0 1)(2 3)");
  CHECK(as_set(pgt::normal_closure(S4(), {x})) == oracle::normal_closure(4, s4, {x}));
  CHECK(pgt::same_group(pgt::normal_closure(S4(), {x}), V4()));
  CHECK(pgt::normal_closure(S4(), {Permutation(4)}).is_trivial());
  CHECK(pgt::same_group(pgt::normal_closure(S4(), {Permutation::from_cycles(4, "(0 1 2)")}), A4()));
}

TEST_CASE("commutator subgroup") {
  auto s4 = as_set(S4());
  CHECK(as_set(pgt::commutator_subgroup(S4(), S4(), S4())) == oracle::derived(4, s4));
  CHECK(pgt::same_group(pgt::commutator_subgroup(S4(), S4(), S4()), A4()));
  CHECK(pgt::commutator_subgroup(D8(), PermGroup::trivial(4), D8()).is_trivial());
  PermGroup dd = pgt::commutator_subgroup(D8(), D8(), D8());
  CHECK(as_set(dd) == oracle::derived(4, as_set(D8())));
  CHECK(pgt::same_group(dd, PermGroup(4, {Permutation::from_cycles(4, "(0 2)(1 3)")})));
}

TEST_CASE("conjugacy classes partition the group") {
  PermGroup G = pgt::psl2(7);
  auto classes = pgt::conjugacy_classes(G);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  CHECK(total == G.order());
  CHECK(classes.size() == 6);
}

TEST_CASE("conjugate subgroups have the same order") {
  PermGroup G = pgt::symmetric(5);
  PermGroup H(5, {Permutation::from_cycles(5, "(0 1 2 3)"), Permutation::from_cycles(5, "(0 2)")});
  for (const auto& g : G.generators()) CHECK(pgt::conjugate_subgroup(H, g).order() == H.order());
}
