#include "pgt/transfer.hpp"

#include "pgt/arith.hpp"
#include "pgt/errors.hpp"
#include "pgt/isomorphism.hpp"
#include "pgt/small_group.hpp"
#include "pgt/structure.hpp"
#include "pgt/subgroups.hpp"
#include "pgt/sylow.hpp"

namespace pgt {

bool TransferResult::equivalent(const TransferResult& other) const {
  return modulus.contains(value * other.value.inverse());
}

Permutation pretransfer(const Transversal& T, const Permutation& g) {
  Permutation v(T.parent().degree());
  for (const auto& t : T.reps()) {
    const Permutation tg = t * g;
    v *= tg * T.coset_rep(tg).inverse();
  }
  return v;
}

TransferResult transfer(const Transversal& T, const Permutation& g) {
  return {T.subgroup(), derived_subgroup(T.subgroup()), pretransfer(T, g)};
}

TransferResult transfer(const PermGroup& G, const PermGroup& H, const Permutation& g) {
  return transfer(right_transversal(G, H), g);
}

bool check_transitivity(const Transversal& GH, const Transversal& GK, const Transversal& KH, const Permutation& g) {
  if (!same_group(GH.subgroup(), KH.subgroup()) || !same_group(GK.subgroup(), KH.parent()))
    throw InvalidArgument("check_transitivity: transversals do not form a chain H <= K <= G");
  const Permutation v = pretransfer(GH, g);
  const Permutation wu = pretransfer(KH, pretransfer(GK, g));
  return derived_subgroup(GH.subgroup()).contains(v * wu.inverse());
}

bool check_transitivity(const PermGroup& G, const PermGroup& K, const PermGroup& H, const Permutation& g) {
  if (!is_subgroup(G, K) || !is_subgroup(K, H)) throw InvalidArgument("check_transitivity: chain is not nested");
  return check_transitivity(right_transversal(G, H), right_transversal(G, K), right_transversal(K, H), g);
}

bool check_mackey(const PermGroup& G, const PermGroup& H, const PermGroup& K, const Permutation& k) {
  if (!is_subgroup(G, H) || !is_subgroup(G, K) || !K.contains(k))
    throw InvalidArgument("check_mackey: H, K must lie in G and k in K");
  const Permutation v = pretransfer(right_transversal(G, H), k);
  Permutation prod(G.degree());
  for (const auto& x : double_coset_reps(G, H, K)) {
    const PermGroup Kx = intersection(K, conjugate_subgroup(H, x));
    prod *= x * pretransfer(right_transversal(K, Kx), k) * x.inverse();
  }
  return derived_subgroup(H).contains(v * prod.inverse());
}

TransferEvaluation transfer_evaluation(const PermGroup& P, const PermGroup& R, const Permutation& u) {
  if (!is_subgroup(P, R) || !P.contains(u)) throw InvalidArgument("transfer_evaluation: need R <= P and u in P");
  const Transversal S = right_transversal(P, R);
  TransferEvaluation ev{{}, Permutation(P.degree()), false, true, false};
  std::vector<bool> seen(S.size(), false);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (seen[i]) continue;
    const Permutation& s = S.reps()[i];
    std::uint64_t n = 0;
    Permutation cur = s;
    do {
      seen[S.index_of_rep(cur)] = true;
      cur = dot_action(S, cur, u);
      ++n;
    } while (cur != s);
    const Permutation term = s * u.pow(static_cast<long long>(n)) * s.inverse();
    if (!R.contains(term)) ev.terms_in_subgroup = false;
    ev.product *= term;
    ev.orbits.emplace_back(s, n);
    total += n;
  }
  ev.lengths_sum_to_index = total == S.size();
  ev.congruent_to_pretransfer = derived_subgroup(R).contains(ev.product * pretransfer(S, u).inverse());
  return ev;
}

PermGroup focal_subgroup(const PermGroup& G, const PermGroup& P) { return intersection(P, derived_subgroup(G)); }

namespace {

std::vector<std::uint64_t> abelian_p_quotient_invariants(const PermGroup& G, std::uint64_t p) {
  return abelian_invariants(quotient_group(G, a_p(G, p)).image());
}

}  // namespace

ControlReport controls_p_transfer(const PermGroup& G, const PermGroup& N, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("controls_p_transfer: p is not prime");
  if (!is_subgroup(G, N)) throw InvalidArgument("controls_p_transfer: N is not a subgroup of G");
  if ((G.order() / N.order()) % p == 0) throw InvalidArgument("controls_p_transfer: p divides |G:N|");
  ControlReport r;
  r.G = G;
  r.N = N;
  r.prime = p;
  r.sylow = N.order() % p == 0 ? sylow_subgroup(N, p) : PermGroup::trivial(G.degree());
  r.focal_G = focal_subgroup(G, r.sylow);
  r.focal_N = focal_subgroup(N, r.sylow);
  r.controls = same_group(r.focal_G, r.focal_N);
  r.quotient_invariants_G = abelian_p_quotient_invariants(G, p);
  r.quotient_invariants_N = abelian_p_quotient_invariants(N, p);
  return r;
}

Lemma23Witness lemma23_witness(const PermGroup& G, const PermGroup& N, std::uint64_t p) {
  Lemma23Witness w;
  const ControlReport report = controls_p_transfer(G, N, p);
  if (report.controls) {
    w.controls = true;
    return w;
  }
  const PermGroup& P = report.sylow;
  if (!is_subgroup(N, normalizer(G, P))) throw InvalidArgument("lemma23_witness: N_G(P) is not contained in N");

  // Index-p normal subgroups of N containing V(G) contain A^p(N).
  const QuotientGroup Q(N, a_p(N, p));
  const SmallGroup S(Q.image(), limits().subgroup_enumeration_cap);
  const Transversal T = right_transversal(G, N);
  std::vector<Permutation> images;
  for (const auto& g : G.generators()) images.push_back(pretransfer(T, g));
  for (const auto& sub : all_subgroups(S)) {
    if (sub.members.count() * p != S.size()) continue;
    PermGroup M = Q.preimage(S.to_group(sub.members));
    bool holds = true;
    for (const auto& v : images) holds = holds && M.contains(v);
    if (holds) w.candidates.push_back(std::move(M));
  }
  if (w.candidates.empty()) {
    w.failure = "no normal subgroup of index p in N contains V(G)";
    return w;
  }
  const PermGroup& M = w.candidates.front();

  w.X = double_coset_reps(G, N, P);
  struct Piece {
    PermGroup R, Q;
    Transversal S;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 1; i < w.X.size(); ++i) {
    const Permutation& x = w.X[i];
    PermGroup R = intersection(P, conjugate_subgroup(N, x));
    PermGroup Qx = intersection(P, conjugate_subgroup(M, x));
    Transversal Sx = right_transversal(P, R);
    pieces.push_back({std::move(R), std::move(Qx), std::move(Sx)});
  }
  for (const auto& u : P.elements()) {
    if (M.contains(u)) continue;
    bool found = false;
    for (std::size_t i = 0; i < pieces.size() && !found; ++i) {
      const Piece& pc = pieces[i];
      Permutation wu = pretransfer(pc.S, u);
      if (pc.Q.contains(wu)) continue;
      found = true;
      Lemma23Step step{u, w.X[i + 1], pc.R, pc.Q, wu, false};
      step.verified = pc.R.contains(wu) && pc.R.order() < P.order() && pc.R.order() == p * pc.Q.order() &&
                      is_subgroup(pc.R, pc.Q);
      if (!step.verified && w.failure.empty()) w.failure = "witness for u = " + u.to_cycle_string() + " fails verification";
      w.steps.push_back(std::move(step));
    }
    if (!found && w.failure.empty()) w.failure = "no double coset representative separates u = " + u.to_cycle_string();
  }
  return w;
}

TateComparison tate_comparison(const PermGroup& G, const PermGroup& N, std::uint64_t p) {
  TateComparison c;
  c.abelian_quotients_isomorphic = abelian_p_quotient_invariants(G, p) == abelian_p_quotient_invariants(N, p);
  c.p_quotients_isomorphic =
      is_isomorphic(quotient_group(G, o_upper_p(G, p)).image(), quotient_group(N, o_upper_p(N, p)).image());
  return c;
}

bool tate_agreement(const PermGroup& G, const PermGroup& N, std::uint64_t p) { return tate_comparison(G, N, p).agree(); }

}  // namespace pgt
