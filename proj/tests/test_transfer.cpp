#include <random>

#include "doctest.h"
#include "pgt/arith.hpp"
#include "pgt/builtins.hpp"
#include "pgt/errors.hpp"
#include "pgt/structure.hpp"
#include "pgt/subgroups.hpp"
#include "pgt/sylow.hpp"
#include "pgt/transfer.hpp"
#include "random_transversal.hpp"

using pgt::Permutation;
using pgt::PermGroup;

namespace {

PermGroup D8() { return PermGroup(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); }
PermGroup V4() {
  return PermGroup(4, {Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")});
}
PermGroup A3() { return PermGroup(3, {Permutation::from_cycles(3, "(0 1 2)")}); }

}  // namespace

TEST_CASE("pretransfer by hand") {
  PermGroup S3 = pgt::symmetric(3);
  const Permutation e(3), t = Permutation::from_cycles(3, "(0 1)"), c = Permutation::from_cycles(3, "(0 1 2)");
  pgt::Transversal T(S3, A3(), {e, t});
  CHECK(pgt::pretransfer(T, e).is_identity());
  // t_1 = e: e t (e.t)^-1 = t t^-1; t_2 = t: t t (t.t)^-1 = e.
  CHECK(pgt::pretransfer(T, t).is_identity());
  // t_1 = e contributes c, t_2 = t contributes t c t^-1 = c^-1.
  CHECK((c * (t * c * t.inverse())).is_identity());
  CHECK(pgt::pretransfer(T, c).is_identity());
  for (const auto& g : S3.elements()) CHECK(A3().contains(pgt::pretransfer(T, g)));
}

TEST_CASE("transfer values") {
  PermGroup S3 = pgt::symmetric(3);
  auto v = pgt::transfer(S3, A3(), Permutation::from_cycles(3, "(0 1)"));
  CHECK(v.value.is_identity());
  CHECK(v.modulus.is_trivial());
  // For a normal subgroup of index 2 with reps {e, t}: V(h) = h (t h t^-1).
  PermGroup Q8 = pgt::generalized_quaternion(8);
  PermGroup C4(Q8.degree(), {Q8.generators()[0]});
  auto T = pgt::right_transversal(Q8, C4);
  const Permutation& t = T.reps()[1];
  for (const auto& h : C4.elements()) {
    CHECK(pgt::pretransfer(T, h) == h * (t * h * t.inverse()));
    CHECK(pgt::pretransfer(T, h).is_identity());
  }
  // Into a central subgroup the transfer is the index-th power map.
  PermGroup C6 = pgt::cyclic(6);
  PermGroup C2(6, {C6.generators()[0].pow(3)});
  for (const auto& g : C6.elements()) CHECK(pgt::transfer(C6, C2, g).value == g.pow(3));
  // S4 -> D8: elements of the derived subgroup map into D8'.
  PermGroup S4 = pgt::symmetric(4);
  PermGroup D = pgt::derived_subgroup(D8());
  for (const auto& g : pgt::alternating(4).elements()) CHECK(D.contains(pgt::transfer(S4, D8(), g).value));
}

TEST_CASE("transfer is a homomorphism modulo H'") {
  std::mt19937 rng(5);
  for (const char* label : {"S4", "PSL2_7", "GL2_3", "A5"}) {
    PermGroup G = pgt::builtin_group(label);
    PermGroup H = pgt::sylow_subgroup(G, 2);
    auto elems = G.elements();
    auto T = pgt::right_transversal(G, H);
    PermGroup Hp = pgt::derived_subgroup(H);
    for (int i = 0; i < 50; ++i) {
      const auto& a = elems[rng() % elems.size()];
      const auto& b = elems[rng() % elems.size()];
      CHECK(Hp.contains(pgt::pretransfer(T, a * b) * (pgt::pretransfer(T, a) * pgt::pretransfer(T, b)).inverse()));
    }
  }
}

TEST_CASE("transfer does not depend on the transversal") {
  std::mt19937 rng(17);
  for (const char* label : {"S4", "SL2_3", "D12", "F21", "A4xC2"}) {
    PermGroup G = pgt::builtin_group(label);
    auto elems = G.elements();
    for (auto p : pgt::prime_divisors(G.order())) {
      PermGroup H = pgt::normalizer(G, pgt::sylow_subgroup(G, p));
      auto T1 = testing_support::shuffled_transversal(G, H, rng);
      auto T2 = testing_support::shuffled_transversal(G, H, rng);
      for (int i = 0; i < 10; ++i) {
        const auto& g = elems[rng() % elems.size()];
        CHECK(pgt::transfer(T1, g).equivalent(pgt::transfer(T2, g)));
      }
    }
  }
}

TEST_CASE("transitivity") {
  PermGroup S4 = pgt::symmetric(4);
  CHECK(pgt::check_transitivity(S4, D8(), V4(), Permutation::from_cycles(4, "(0 1 2 3)")));
  CHECK(pgt::check_transitivity(S4, pgt::alternating(4), V4(), Permutation::from_cycles(4, "(0 1 2)")));
  CHECK(pgt::check_transitivity(S4, D8(), D8(), Permutation::from_cycles(4, "(0 1)")));
  CHECK_THROWS_AS(pgt::check_transitivity(S4, V4(), D8(), Permutation(4)), pgt::InvalidArgument);
  std::mt19937 rng(3);
  PermGroup A4 = pgt::alternating(4);
  for (const auto& g : S4.elements()) {
    CHECK(pgt::check_transitivity(testing_support::shuffled_transversal(S4, V4(), rng),
                                  testing_support::shuffled_transversal(S4, A4, rng),
                                  testing_support::shuffled_transversal(A4, V4(), rng), g));
  }
}

TEST_CASE("Mackey decomposition") {
  PermGroup S4 = pgt::symmetric(4);
  CHECK(pgt::check_mackey(S4, D8(), S4, Permutation::from_cycles(4, "(0 1)")));
  CHECK(pgt::check_mackey(S4, D8(), D8(), Permutation::from_cycles(4, "(0 2)(1 3)")));
  PermGroup S3 = pgt::symmetric(3);
  PermGroup t(3, {Permutation::from_cycles(3, "(0 1)")});
  CHECK(pgt::check_mackey(S3, t, A3(), Permutation::from_cycles(3, "(0 1 2)")));
  for (const auto& k : D8().elements()) CHECK(pgt::check_mackey(S4, pgt::alternating(4), D8(), k));
  PermGroup L = pgt::psl2(7);
  PermGroup P = pgt::sylow_subgroup(L, 2), R = pgt::sylow_subgroup(L, 3);
  for (const auto& k : R.elements()) CHECK(pgt::check_mackey(L, P, R, k));
}

TEST_CASE("transfer evaluation") {
  PermGroup P = D8();
  PermGroup Z = pgt::center(P);
  auto id = pgt::transfer_evaluation(P, Z, Permutation(4));
  for (const auto& [s, n] : id.orbits) CHECK(n == 1);
  CHECK(id.product.is_identity());
  CHECK(id.ok());
  Permutation r{1, 2, 3, 0};
  auto ev = pgt::transfer_evaluation(P, Z, r);
  std::uint64_t total = 0;
  for (const auto& [s, n] : ev.orbits) total += n;
  CHECK(total == 4);
  CHECK(ev.ok());
  // u in Core_P(R) fixes every representative.
  PermGroup R(4, {Permutation::from_cycles(4, "(0 2)"), Permutation::from_cycles(4, "(1 3)")});
  for (const auto& u : pgt::core(P, R).elements()) {
    auto e = pgt::transfer_evaluation(P, R, u);
    Permutation direct(4);
    for (const auto& [s, n] : e.orbits) {
      CHECK(n == 1);
      direct *= s * u * s.inverse();
    }
    CHECK(e.product == direct);
    CHECK(e.ok());
  }
  PermGroup W = pgt::wreath_cyclic(3);
  PermGroup Zw = pgt::z_k(W, 2);
  for (const auto& u : W.generators()) CHECK(pgt::transfer_evaluation(W, Zw, u).ok());
}

TEST_CASE("focal subgroups") {
  PermGroup S4 = pgt::symmetric(4);
  CHECK(pgt::same_group(pgt::focal_subgroup(S4, D8()), V4()));
  PermGroup E = pgt::elementary_abelian(3, 2);
  CHECK(pgt::focal_subgroup(E, E).is_trivial());
  PermGroup A5 = pgt::alternating(5);
  PermGroup P = pgt::sylow_subgroup(A5, 2);
  CHECK(pgt::same_group(pgt::focal_subgroup(A5, P), P));
}

TEST_CASE("control of p-transfer") {
  PermGroup S4 = pgt::symmetric(4);
  PermGroup P = pgt::sylow_subgroup(S4, 2);
  auto r = pgt::controls_p_transfer(S4, P, 2);
  CHECK_FALSE(r.controls);
  CHECK(r.focal_G.order() == 4);
  CHECK(r.focal_N.order() == 2);
  CHECK(r.consistent());
  CHECK(pgt::controls_p_transfer(S4, S4, 2).controls);
  PermGroup A5 = pgt::alternating(5);
  PermGroup NV = pgt::normalizer(A5, pgt::sylow_subgroup(A5, 2));
  CHECK(NV.order() == 12);
  auto a = pgt::controls_p_transfer(A5, NV, 2);
  CHECK(a.controls);
  CHECK(a.consistent());
  CHECK_THROWS_AS(pgt::controls_p_transfer(S4, pgt::sylow_subgroup(S4, 3), 2), pgt::InvalidArgument);
}

TEST_CASE("focal test agrees with the A^p quotient test") {
  for (const char* label : {"S4", "A4", "A5", "S5", "PSL2_7", "SL2_3", "GL2_3", "F20", "F21", "S3xS3", "D12", "Q16",
                            "C3wrC3", "A4xC2"}) {
    PermGroup G = pgt::builtin_group(label);
    for (auto p : pgt::prime_divisors(G.order())) {
      CAPTURE(label);
      CAPTURE(p);
      PermGroup N = pgt::normalizer(G, pgt::sylow_subgroup(G, p));
      auto r = pgt::controls_p_transfer(G, N, p);
      CHECK(r.consistent());
      CHECK(pgt::tate_agreement(G, N, p));
    }
  }
}

TEST_CASE("lemma 2.3 witnesses") {
  PermGroup S4 = pgt::symmetric(4);
  PermGroup P = pgt::sylow_subgroup(S4, 2);
  auto w = pgt::lemma23_witness(S4, P, 2);
  CHECK_FALSE(w.controls);
  CHECK(w.failure.empty());
  REQUIRE_FALSE(w.candidates.empty());
  CHECK(w.candidates.front().order() == 4);
  CHECK(w.X.size() == 2);
  CHECK(w.steps.size() == 4);
  for (const auto& s : w.steps) {
    CHECK(s.verified);
    CHECK(pgt::same_group(s.R, V4()));
    CHECK(s.R.order() == 2 * s.Q.order());
  }
  CHECK(pgt::lemma23_witness(S4, S4, 2).controls);
  PermGroup A5 = pgt::alternating(5);
  CHECK(pgt::lemma23_witness(A5, pgt::normalizer(A5, pgt::sylow_subgroup(A5, 2)), 2).controls);
}

TEST_CASE("Tate comparison") {
  PermGroup S4 = pgt::symmetric(4);
  auto c = pgt::tate_comparison(S4, pgt::sylow_subgroup(S4, 2), 2);
  CHECK_FALSE(c.abelian_quotients_isomorphic);
  CHECK_FALSE(c.p_quotients_isomorphic);
  auto g = pgt::tate_comparison(S4, S4, 2);
  CHECK(g.abelian_quotients_isomorphic);
  CHECK(g.p_quotients_isomorphic);
  PermGroup A5 = pgt::alternating(5);
  auto a = pgt::tate_comparison(A5, pgt::normalizer(A5, pgt::sylow_subgroup(A5, 2)), 2);
  CHECK(a.abelian_quotients_isomorphic);
  CHECK(a.p_quotients_isomorphic);
}
