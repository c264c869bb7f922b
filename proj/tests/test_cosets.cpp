#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pgt/builtins.hpp"
#include "pgt/cosets.hpp"
#include "pgt/errors.hpp"
#include "pgt/isomorphism.hpp"
#include "pgt/subgroups.hpp"

using pgt::Permutation;
using pgt::PermGroup;

namespace {
PermGroup D8() { return PermGroup(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); }
PermGroup V4() { return PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")}); }
PermGroup A3() { return PermGroup(3, {Permutation::from_cycles(3, "(0 1 2)")}); }
}  // namespace

TEST_CASE("right transversal sizes and ordering") {
  auto T = pgt::right_transversal(pgt::symmetric(4), D8());
  CHECK(T.size() == 3);
  CHECK(T.reps()[0].is_identity());
  CHECK(std::is_sorted(T.reps().begin(), T.reps().end()));
  auto TG = pgt::right_transversal(D8(), D8());
  REQUIRE(TG.size() == 1);
  CHECK(TG.reps()[0].is_identity());
  CHECK(pgt::right_transversal(pgt::symmetric(3), A3()).size() == 2);
}

TEST_CASE("transversal validation") {
  PermGroup S3 = pgt::symmetric(3);
  Permutation t = Permutation::from_cycles(3, "(0 1)");
  CHECK_NOTHROW(pgt::Transversal(S3, A3(), {Permutation(3), t}));
  // (0 1 2) lies in the identity coset.
  CHECK_THROWS_AS(pgt::Transversal(S3, A3(), {Permutation(3), Permutation::from_cycles(3, "(0 1 2)")}),
                  pgt::InvalidArgument);
  CHECK_THROWS_AS(pgt::Transversal(S3, A3(), {Permutation(3)}), pgt::InvalidArgument);
}

TEST_CASE("every element lies in exactly one listed coset") {
  PermGroup G = pgt::psl2(7);
  PermGroup H = pgt::normalizer(G, PermGroup(G.degree(), {G.generators()[0]}));
  auto T = pgt::right_transversal(G, H);
  CHECK(G.order() == H.order() * T.size());
  for (const auto& g : G.elements()) {
    int hits = 0;
    for (const auto& r : T.reps()) hits += H.contains(g * r.inverse());
    CHECK(hits == 1);
    CHECK(H.contains(g * T.coset_rep(g).inverse()));
  }
}

TEST_CASE("dot action") {
  PermGroup S3 = pgt::symmetric(3);
  Permutation t = Permutation::from_cycles(3, "(0 1)");
  pgt::Transversal T(S3, A3(), {Permutation(3), t});
  CHECK(pgt::dot_action(T, Permutation(3), t) == t);
  CHECK(pgt::dot_action(T, t, Permutation(3)) == t);
  CHECK_THROWS_AS(pgt::dot_action(T, Permutation::from_cycles(3, "(0 2)"), t), pgt::InvalidArgument);

  // Elements of the core fix every representative.
  PermGroup S4 = pgt::symmetric(4);
  auto TD = pgt::right_transversal(S4, D8());
  for (const auto& g : pgt::core(S4, D8()).elements())
    for (const auto& r : TD.reps()) CHECK(pgt::dot_action(TD, r, g) == r);
}

TEST_CASE("dot action is a right action") {
  std::mt19937 rng(11);
  PermGroup G = pgt::builtin_group("S4xC2");
  PermGroup H = pgt::builtin_group("S4xC2");
  H = pgt::normalizer(G, PermGroup(G.degree(), {G.generators()[1]}));
  auto T = pgt::right_transversal(G, H);
  auto elems = G.elements();
  for (int i = 0; i < 100; ++i) {
    const auto& t = T.reps()[rng() % T.size()];
    const auto& g = elems[rng() % elems.size()];
    const auto& h = elems[rng() % elems.size()];
    CHECK(pgt::dot_action(T, pgt::dot_action(T, t, g), h) == pgt::dot_action(T, t, g * h));
  }
}

TEST_CASE("double cosets") {
  PermGroup S4 = pgt::symmetric(4);
  auto X = pgt::double_coset_reps(S4, D8(), D8());
  REQUIRE(X.size() == 2);
  CHECK(X[0].is_identity());
  std::vector<std::size_t> sizes;
  for (const auto& x : X) {
    // |HxK| = |H||K| / |K cap H^x|.
    auto Hx = pgt::conjugate_subgroup(D8(), x);
    sizes.push_back(D8().order() * D8().order() / pgt::intersection(D8(), Hx).order());
  }
  CHECK(sizes[0] + sizes[1] == 24);
  CHECK(std::min(sizes[0], sizes[1]) == 8);

  CHECK(pgt::double_coset_reps(S4, S4, D8()).size() == 1);

  PermGroup S3 = pgt::symmetric(3);
  PermGroup t(3, {Permutation::from_cycles(3, "(0 1)")});
  auto Y = pgt::double_coset_reps(S3, t, t);
  CHECK(Y.size() == 2);
}

TEST_CASE("double coset sizes match the stabilizer formula on a larger group") {
  PermGroup G = pgt::psl2(11);
  PermGroup H = pgt::normalizer(G, PermGroup(G.degree(), {G.generators()[0]}));
  PermGroup K = pgt::normalizer(G, PermGroup(G.degree(), {G.generators()[1]}));
  std::size_t total = 0;
  std::set<Permutation> covered;
  for (const auto& x : pgt::double_coset_reps(G, H, K)) {
    std::uint64_t size = H.order() * K.order() / pgt::intersection(K, pgt::conjugate_subgroup(H, x)).order();
    total += size;
    for (const auto& h : H.elements())
      for (const auto& k : K.elements()) covered.insert(h * x * k);
  }
  CHECK(total == G.order());
  CHECK(covered.size() == G.order());
}

TEST_CASE("quotient groups") {
  PermGroup S4 = pgt::symmetric(4);
  auto Q = pgt::quotient_group(S4, V4());
  CHECK(Q.image().order() == 6);
  CHECK_FALSE(pgt::is_abelian(Q.image()));
  for (const auto& a : S4.generators())
    for (const auto& b : S4.generators()) CHECK(Q.project(a * b) == Q.project(a) * Q.project(b));
  for (const auto& g : S4.elements()) CHECK(Q.project(g).is_identity() == V4().contains(g));

  auto T = pgt::quotient_group(S4, PermGroup::trivial(4));
  CHECK(T.image().order() == 24);

  PermGroup D = D8();
  auto QD = pgt::quotient_group(D, pgt::center(D));
  CHECK(QD.image().order() == 4);
  for (const auto& y : QD.image().elements()) CHECK((y * y).is_identity());

  CHECK_THROWS_AS(pgt::quotient_group(S4, D8()), pgt::InvalidArgument);
}

TEST_CASE("quotient preimage and lift") {
  PermGroup S4 = pgt::symmetric(4);
  auto Q = pgt::quotient_group(S4, V4());
  for (const auto& y : Q.image().elements()) CHECK(Q.project(Q.lift(y)) == y);
  PermGroup sub(Q.image().degree(), {Q.project(Permutation::from_cycles(4, "(0 1 2)"))});
  CHECK(pgt::same_group(Q.preimage(sub), pgt::alternating(4)));
  CHECK(Q.image().order() * Q.kernel().order() == Q.source().order());
}

TEST_CASE("maximal subgroups") {
  PermGroup S4 = pgt::symmetric(4);
  CHECK(pgt::is_maximal(S4, D8()));
  CHECK_FALSE(pgt::is_maximal(S4, V4()));
  CHECK(pgt::is_maximal(pgt::symmetric(3), A3()));
  CHECK_THROWS_AS(pgt::is_maximal(S4, S4), pgt::InvalidArgument);
}
