#include "pgt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pgt/arith.hpp"
#include "pgt/builtins.hpp"
#include "pgt/cosets.hpp"
#include "pgt/errors.hpp"
#include "pgt/isomorphism.hpp"
#include "pgt/small_group.hpp"
#include "pgt/structure.hpp"
#include "pgt/subgroups.hpp"
#include "pgt/sylow.hpp"
#include "pgt/transfer.hpp"

namespace pgt {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::implication_ok: return "implication_ok";
    case Verdict::vacuous: return "vacuous";
    case Verdict::violation: return "VIOLATION";
    case Verdict::skipped_cap: return "skipped:cap";
  }
  return "?";
}

std::string CheckerVerdict::witness_summary() const {
  std::string s;
  for (const auto& [k, v] : witnesses) {
    if (!s.empty()) s += "; ";
    s += k + "=" + v;
  }
  return s;
}

ControlStats& ControlStats::operator+=(const ControlStats& o) {
  evaluations += o.evaluations;
  focal_quotient_disagreements += o.focal_quotient_disagreements;
  tate_disagreements += o.tate_disagreements;
  return *this;
}

namespace {

std::string describe(const PermGroup& H) {
  std::string s = "order " + std::to_string(H.order());
  if (H.is_trivial()) return s;
  s += " <";
  bool first = true;
  for (const auto& g : H.generators()) {
    if (g.is_identity()) continue;
    if (!first) s += ",";
    s += g.to_cycle_string();
    first = false;
  }
  return s + ">";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Memoised value; a cap hit is remembered and rethrown on later calls.
template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) {
    if (value_) return *value_;
    if (cap_error_) throw ResourceCapExceeded(*cap_error_);
    try {
      value_.emplace(make());
    } catch (const ResourceCapExceeded& e) {
      cap_error_ = e.what();
      throw;
    }
    return *value_;
  }

 private:
  std::optional<T> value_;
  std::optional<std::string> cap_error_;
};

using NamedSubgroup = std::pair<std::string, PermGroup>;

/// Everything the checkers share for one (G, p).
class CheckContext {
 public:
  CheckContext(const PermGroup& G, std::uint64_t p) : G_(G), p_(p) {}

  const PermGroup& G() const { return G_; }
  std::uint64_t p() const { return p_; }
  ControlStats stats;

  const SylowFamily& family() {
    return family_.get([&] { return all_sylow_subgroups(G_, p_); });
  }
  const PermGroup& P() { return family().base_subgroup(); }
  const PermGroup& NP() { return family().normalizer; }

  /// N controls p-transfer in X; every call is tallied in `stats`.
  bool controls_in(const PermGroup& X, const PermGroup& N) {
    const ControlReport r = controls_p_transfer(X, N, p_);
    ++stats.evaluations;
    if (!r.consistent()) ++stats.focal_quotient_disagreements;
    if (!tate_agreement(X, N, p_)) ++stats.tate_disagreements;
    return r.controls;
  }
  bool np_controls() {
    return np_controls_.get([&] { return controls_in(G_, NP()); });
  }
  const PermGroup& zp1() {
    return zp1_.get([&] { return z_k(P(), static_cast<unsigned>(p_ - 1)); });
  }
  const PermGroup& zstar() {
    return zstar_.get([&] { return norm(P()); });
  }
  unsigned p_class() {
    return p_class_.get([&] { return *nilpotency_class(P()); });
  }
  bool g_p_nilpotent() {
    return g_p_nilpotent_.get([&] { return is_p_nilpotent(G_, p_); });
  }
  std::uint64_t max_intersection() {
    return max_intersection_.get([&] { return max_intersection_order(family()); });
  }
  const std::vector<TameIntersectionRecord>& tame(bool star, bool strict_upper) {
    auto& slot = tame_[(star ? 2 : 0) + (strict_upper ? 1 : 0)];
    return slot.get([&] { return tame_intersections_between(G_, family(), star ? zstar() : zp1(), strict_upper); });
  }
  const PermGroup& op() {
    return op_.get([&] { return o_p(G_, p_); });
  }
  const SeriesResult& pseries() {
    return pseries_.get([&] { return p_series(G_, p_); });
  }
  const Lemma23Witness& lemma23() {
    return lemma23_.get([&] { return lemma23_witness(G_, NP(), p_); });
  }
  /// N_G(P)/Z controls p-transfer in G/Z.
  bool quotient_controls(const PermGroup& Z) {
    const QuotientGroup Q = quotient_group(G_, Z);
    return controls_in(Q.image(), Q.project_subgroup(NP()));
  }

  /// Normal subgroups Z of G with 1 < Z <= P used by lemma_3_1 and lemma_3_2.
  std::vector<NamedSubgroup> z_candidates(const CheckerParams& params) {
    if (params.Z) {
      if (!is_subgroup(P(), *params.Z) || !is_normal(G_, *params.Z))
        throw InvalidArgument("explicit Z must be a normal subgroup of G inside the Sylow subgroup");
      return {{"Z", *params.Z}};
    }
    const PermGroup& O = op();
    std::vector<NamedSubgroup> raw;
    if (!O.is_trivial()) {
      raw.emplace_back("O_p(G)", O);
      raw.emplace_back("Omega(O_p(G))", omega(O, p_));
      raw.emplace_back("Z(P)&O_p(G)", intersection(center(P()), O));
    }
    std::vector<NamedSubgroup> out;
    for (auto& [name, Z] : raw) {
      if (Z.is_trivial() || !is_normal(G_, Z)) continue;
      bool dup = false;
      for (const auto& kept : out) dup = dup || same_group(kept.second, Z);
      if (!dup) out.emplace_back(name, std::move(Z));
    }
    return out;
  }

 private:
  PermGroup G_;
  std::uint64_t p_;
  Lazy<SylowFamily> family_;
  Lazy<bool> np_controls_;
  Lazy<PermGroup> zp1_, zstar_, op_;
  Lazy<unsigned> p_class_;
  Lazy<bool> g_p_nilpotent_;
  Lazy<std::uint64_t> max_intersection_;
  Lazy<std::vector<TameIntersectionRecord>> tame_[4];
  Lazy<SeriesResult> pseries_;
  Lazy<Lemma23Witness> lemma23_;
};

struct Outcome {
  CheckerVerdict& v;
  std::vector<Discrepancy>& discrepancies;
  const CheckerParams& params;

  void witness(std::string key, std::string value) { v.witnesses.emplace_back(std::move(key), std::move(value)); }
  void note(std::string text) { v.interpretation_notes.push_back(std::move(text)); }
  void discrepancy(std::string kind, std::string detail) {
    discrepancies.push_back({std::move(kind), v.checker_id, v.group_label, v.prime, std::move(detail)});
  }
};

using CheckFn = std::function<void(CheckContext&, Outcome&)>;

Verdict verdict_of(bool hypothesis, bool conclusion) {
  if (!hypothesis) return Verdict::vacuous;
  return conclusion ? Verdict::implication_ok : Verdict::violation;
}

void check_bound(CheckContext& c, Outcome& o, std::uint64_t bound, const char* bound_name) {
  const std::uint64_t m = c.max_intersection();
  o.witness("max_intersection", std::to_string(m));
  o.witness(bound_name, std::to_string(bound));
  o.witness("sylow_count", std::to_string(c.family().members.size()));
  o.v.hypothesis_holds = m <= bound;
  o.v.conclusion_holds = c.np_controls();
}

/// Tame intersections above L = Z_{p-1}(P) or Z*(P).
void check_tame(CheckContext& c, Outcome& o, bool star, bool strict_upper, bool weak, bool p_nilpotent_conclusion) {
  const PermGroup& L = star ? c.zstar() : c.zp1();
  const auto& records = c.tame(star, strict_upper);
  o.witness(star ? "Z*(P)" : "Z_{p-1}(P)", describe(L));
  o.witness("tame_intersections", std::to_string(records.size()));
  o.v.hypothesis_holds = true;
  for (const auto& r : records) {
    const bool ok = weak ? r.n_over_c_is_p_group : r.normalizer_p_nilpotent;
    if (ok) continue;
    o.v.hypothesis_holds = false;
    o.witness("failing_intersection", describe(r.D));
    o.witness("normalizer_order", std::to_string(r.normalizer.order()));
    break;
  }
  o.v.conclusion_holds = p_nilpotent_conclusion ? c.g_p_nilpotent() : c.np_controls();
  if (!p_nilpotent_conclusion) return;
  // With L = P no intersection lies strictly above L and the quantifier is empty.
  o.note("default reading: literal strict lower bound");
  if (L.order() != c.P().order()) return;
  const bool np_nilpotent = is_p_nilpotent(c.NP(), c.p());
  const Verdict alt = verdict_of(o.v.hypothesis_holds && np_nilpotent, o.v.conclusion_holds);
  o.note(std::string("lower bound equals P; reading with D = P included: ") + to_string(alt));
  if (alt != verdict_of(o.v.hypothesis_holds, o.v.conclusion_holds))
    o.discrepancy("degenerate_lower_bound", std::string(star ? "Z*(P)" : "Z_{p-1}(P)") +
                                                " = P, N_G(P) p-nilpotent=" + yes_no(np_nilpotent) +
                                                ": literal reading gives " +
                                                to_string(verdict_of(o.v.hypothesis_holds, o.v.conclusion_holds)) +
                                                ", reading with D = P included gives " + to_string(alt));
}

void check_burnside(CheckContext& c, Outcome& o) {
  o.v.hypothesis_holds = is_abelian(c.P());
  o.witness("|P|", std::to_string(c.P().order()));
  o.v.conclusion_holds = c.np_controls();
  o.witness("|N_G(P)|", std::to_string(c.NP().order()));
}

void check_hall_wielandt(CheckContext& c, Outcome& o) {
  o.witness("class", std::to_string(c.p_class()));
  o.v.hypothesis_holds = c.p_class() < c.p();
  o.v.conclusion_holds = c.np_controls();
}

void check_yoshida(CheckContext& c, Outcome& o) {
  const std::uint64_t p = c.p();
  const std::uint64_t w = ipow(p, static_cast<unsigned>(p + 1));
  const PermGroup& P = c.P();
  o.v.hypothesis_holds = true;
  if (P.order() < w) {
    o.witness("reason", "|P| < p^(p+1)");
  } else {
    const SmallGroup S(P, limits().subgroup_enumeration_cap);
    const PermGroup W = wreath_cyclic(static_cast<unsigned>(p));
    for (const auto& sub : normal_subgroups(S)) {
      if (sub.members.count() * w != S.size()) continue;
      const PermGroup N = S.to_group(sub.members);
      if (!is_isomorphic(quotient_group(P, N).image(), W)) continue;
      o.v.hypothesis_holds = false;
      o.witness("wreath_quotient_kernel", describe(N));
      break;
    }
  }
  o.v.conclusion_holds = c.np_controls();
}

void check_thm_1_10(CheckContext& c, Outcome& o) {
  const PermGroup& Zs = c.zstar();
  const SmallGroup S(Zs, limits().subgroup_enumeration_cap);
  std::size_t admissible = 0;
  o.v.conclusion_holds = true;
  for (const auto& sub : all_subgroups(S)) {
    const PermGroup K = S.to_group(sub.members);
    if (K.is_trivial() || !is_weakly_closed(c.G(), c.P(), K).weakly_closed) continue;
    ++admissible;
    const PermGroup N = normalizer(c.G(), K);
    if (!c.controls_in(c.G(), N) && o.v.conclusion_holds) {
      o.v.conclusion_holds = false;
      o.witness("noncontrolling_K", describe(K));
    }
  }
  o.witness("Z*(P)", describe(Zs));
  o.witness("weakly_closed_K", std::to_string(admissible));
  o.v.hypothesis_holds = admissible > 0;
  o.note("quantifies over every nontrivial K <= Z*(P) weakly closed in P; conclusion uses N_G(K)");
}

void check_prop_3_4(CheckContext& c, Outcome& o) {
  const auto chars = characteristic_subgroups_above(c.P(), c.zp1());
  o.witness("characteristic_above_Z_{p-1}", std::to_string(chars.size()));
  o.v.hypothesis_holds = true;
  for (const auto& C : chars) {
    const WeakClosureResult wc = is_weakly_closed(c.G(), c.P(), C);
    if (wc.weakly_closed) continue;
    o.v.hypothesis_holds = false;
    o.witness("not_weakly_closed", describe(C));
    o.witness("conjugator", wc.conjugator->to_cycle_string());
    break;
  }
  o.v.conclusion_holds = c.np_controls();
}

void check_gruen(CheckContext& c, Outcome& o) {
  const PermGroup& Z = c.zp1();
  const WeakClosureResult wc = is_weakly_closed(c.G(), c.P(), Z);
  o.witness("Z_{p-1}(P)", describe(Z));
  o.v.hypothesis_holds = wc.weakly_closed;
  if (!wc.weakly_closed) o.witness("conjugator", wc.conjugator->to_cycle_string());
  const PermGroup N = normalizer(c.G(), Z);
  o.witness("|N_G(Z)|", std::to_string(N.order()));
  o.v.conclusion_holds = c.controls_in(c.G(), N);
  o.note("conclusion uses N_G(Z_{p-1}(P))");
}

void check_lemma_3_1(CheckContext& c, Outcome& o) {
  const auto candidates = c.z_candidates(o.params);
  o.v.hypothesis_holds = false;
  const PermGroup Phi = frattini_p(c.P(), c.p());
  for (const auto& [name, Z] : candidates) {
    const bool qc = c.quotient_controls(Z);
    const bool a = lemma31_condition_a(c.P(), Z, c.p());
    const bool b = is_subgroup(Phi, Z);
    o.witness(name, "order " + std::to_string(Z.order()) + " quotient_controls=" + yes_no(qc) +
                        " condition_a=" + yes_no(a) + " in_frattini=" + yes_no(b));
    if (qc && (a || b)) o.v.hypothesis_holds = true;
  }
  if (candidates.empty()) o.witness("Z_candidates", "none");
  o.v.conclusion_holds = c.np_controls();
}

void check_lemma_3_2(CheckContext& c, Outcome& o) {
  const auto candidates = c.z_candidates(o.params);
  const bool controls = c.np_controls();
  std::vector<const PermGroup*> active;
  for (const auto& [name, Z] : candidates) {
    const bool qc = c.quotient_controls(Z);
    o.witness(name, "order " + std::to_string(Z.order()) + " quotient_controls=" + yes_no(qc));
    if (!controls && qc) active.push_back(&Z);
  }
  if (candidates.empty()) o.witness("Z_candidates", "none");
  o.v.hypothesis_holds = !active.empty();
  o.v.conclusion_holds = true;
  if (controls) return;
  if (active.empty())
    for (const auto& named : candidates) active.push_back(&named.second);
  const Lemma23Witness& w = c.lemma23();
  o.witness("M_candidates", std::to_string(w.candidates.size()));
  if (!w.verified()) {
    o.v.conclusion_holds = false;
    o.witness("lemma23_failure", w.failure);
    return;
  }
  for (const PermGroup* Z : active)
    for (const auto& M : w.candidates)
      if (is_subgroup(M, *Z)) {
        o.v.conclusion_holds = false;
        o.witness("Z_inside_M", describe(*Z));
      }
}

void check_thm_4_2(CheckContext& c, Outcome& o) {
  const std::uint64_t p = c.p();
  const bool class_p = c.p_class() == p;
  const bool nilp = is_p_nilpotent(c.NP(), p);
  const bool proper = c.NP().order() < c.G().order();
  const bool maximal = class_p && nilp && proper && is_maximal(c.G(), c.NP());
  o.witness("class", std::to_string(c.p_class()));
  o.witness("N_G(P)_p_nilpotent", yes_no(nilp));
  o.witness("N_G(P)_maximal", yes_no(maximal));
  o.v.hypothesis_holds = class_p && nilp && maximal;

  const SeriesResult& ps = c.pseries();
  const bool solvable = ps.terms.back().order() == c.G().order();
  unsigned plen = 0, qlen = 0;
  const auto first = ps.factor_kinds.find('p');
  const auto last = ps.factor_kinds.rfind('p');
  for (std::size_t i = 0; i < ps.factor_kinds.size(); ++i) {
    if (ps.factor_kinds[i] == 'p') ++plen;
    else if (first != std::string::npos && i > first && i < last) ++qlen;
  }
  o.witness("p_solvable", yes_no(solvable));
  o.witness("p_length", std::to_string(plen));
  o.witness("p'_length", std::to_string(qlen));
  const bool prime_reading = solvable && qlen <= 1;
  const bool strict_reading = solvable && plen <= 1;
  o.v.conclusion_holds = prime_reading;
  o.note("default reading: p'-length <= 1");
  o.note("p-length reading: " + to_string(verdict_of(o.v.hypothesis_holds, strict_reading)));
  if (o.v.hypothesis_holds && strict_reading != prime_reading)
    o.discrepancy("p_length_reading", "p_length=" + std::to_string(plen) + " p'_length=" + std::to_string(qlen) +
                                          ": VIOLATION under the p-length reading, implication_ok under p'-length");
}

void check_thm_4_3(CheckContext& c, Outcome& o) {
  const std::size_t count = c.family().members.size();
  o.witness("class", std::to_string(c.p_class()));
  o.witness("sylow_count", std::to_string(count));
  o.v.hypothesis_holds = c.p_class() == c.p() && count == c.p() + 1;
  const bool controls = c.np_controls();
  o.witness("controls", yes_no(controls));
  o.witness("O_p(G)", describe(c.op()));
  o.v.conclusion_holds = controls || !c.op().is_trivial();
}

/// Nilpotent maximal subgroups found among Sylow normalizers and annotations.
std::vector<NamedSubgroup> nilpotent_maximal_candidates(const PermGroup& G, const CheckerParams& params, Outcome& o) {
  std::vector<NamedSubgroup> out;
  auto consider = [&](std::string name, PermGroup M) {
    if (M.order() == G.order() || !is_nilpotent(M) || !is_maximal(G, M)) return false;
    for (const auto& kept : out)
      if (same_group(kept.second, M)) return true;
    out.emplace_back(std::move(name), std::move(M));
    return true;
  };
  for (auto q : prime_divisors(G.order())) consider("N_G(Sylow_" + std::to_string(q) + ")", normalizer(G, sylow_subgroup(G, q)));
  for (std::size_t i = 0; i < params.maximal_subgroups.size(); ++i) {
    const PermGroup& M = params.maximal_subgroups[i];
    if (!is_subgroup(G, M) || !consider("annotation_" + std::to_string(i), M))
      o.note("annotation " + std::to_string(i) + " rejected: not a nilpotent maximal subgroup");
  }
  return out;
}

void check_nilpotent_maximal(CheckContext& c, Outcome& o, bool norm_measure) {
  o.v.hypothesis_holds = false;
  for (const auto& [name, M] : nilpotent_maximal_candidates(c.G(), o.params, o)) {
    const PermGroup S2 = M.order() % 2 == 0 ? sylow_subgroup(M, 2) : PermGroup::trivial(M.degree());
    const unsigned measure = norm_measure ? norm_length(S2) : *nilpotency_class(S2);
    o.witness(name, "order " + std::to_string(M.order()) + (norm_measure ? " sylow2_norm_length=" : " sylow2_class=") +
                        std::to_string(measure));
    if (measure <= 2) o.v.hypothesis_holds = true;
  }
  if (o.v.witnesses.empty()) o.witness("nilpotent_maximal", "none found");
  o.v.conclusion_holds = is_solvable(c.G());
  o.witness("solvable", yes_no(o.v.conclusion_holds));
  o.note("M searched among Sylow normalizers and annotated subgroups");
}

bool thm_4_8_hypothesis(const PermGroup& P, std::uint64_t p, OrderReading r) {
  const auto k = static_cast<unsigned>(p);
  return is_pi_central_of_height(P, p, 1, k - 2, r) || is_pi_central_of_height(P, p, 2, k - 1, r);
}

void check_thm_4_8(CheckContext& c, Outcome& o) {
  o.v.conclusion_holds = c.np_controls();
  if (c.p() == 2) {
    o.v.hypothesis_holds = false;
    o.note("requires p odd");
    return;
  }
  o.v.hypothesis_holds = thm_4_8_hypothesis(c.P(), c.p(), OrderReading::strict);
  const bool alt = thm_4_8_hypothesis(c.P(), c.p(), OrderReading::dividing);
  o.witness("strict_order_hypothesis", yes_no(o.v.hypothesis_holds));
  o.witness("dividing_order_hypothesis", yes_no(alt));
  o.note("default reading: elements of order exactly p^i");
  const Verdict a = verdict_of(alt, o.v.conclusion_holds);
  o.note("dividing-order reading: " + to_string(a));
  if (a != verdict_of(o.v.hypothesis_holds, o.v.conclusion_holds))
    o.discrepancy("order_reading", "dividing-order reading gives " + to_string(a));
}

void check_thm_4_10(CheckContext& c, Outcome& o) {
  const PermGroup& G = c.G();
  const std::uint64_t p = c.p();
  const PermGroup Om = omega(G, p);
  const PermGroup Q = quotient_group(G, Om).image();
  o.witness("Omega(G)", describe(Om));
  o.witness("|G/Omega(G)|", std::to_string(Q.order()));
  o.v.hypothesis_holds = thm_4_8_hypothesis(G, p, OrderReading::strict);
  o.v.conclusion_holds = thm_4_8_hypothesis(Q, p, OrderReading::strict);
  o.note("Omega(G) = Omega_1(G); default reading: elements of order exactly p^i");
  const Verdict a =
      verdict_of(thm_4_8_hypothesis(G, p, OrderReading::dividing), thm_4_8_hypothesis(Q, p, OrderReading::dividing));
  o.note("dividing-order reading: " + to_string(a));
  if (a != verdict_of(o.v.hypothesis_holds, o.v.conclusion_holds))
    o.discrepancy("order_reading", "dividing-order reading gives " + to_string(a));
}

struct CheckerEntry {
  CheckerInfo info;
  CheckFn fn;
};

const std::vector<CheckerEntry>& entries() {
  static const std::vector<CheckerEntry> table = [] {
    using C = CheckContext;
    using O = Outcome;
    const std::string controls = "N_G(P) controls p-transfer in G";
    const std::string p_nilpotent = "G is p-nilpotent";
    return std::vector<CheckerEntry>{
        {{"burnside", "P is abelian", controls, {}}, check_burnside},
        {{"hall_wielandt", "class(P) < p", controls, {}}, check_hall_wielandt},
        {{"yoshida", "P has no quotient isomorphic to Z_p wr Z_p", controls, {}}, check_yoshida},
        {{"main_1_3", "every tame Z_{p-1}(P) < P&Q < P has p-nilpotent normalizer", controls, {}},
         [](C& c, O& o) { check_tame(c, o, false, true, false, false); }},
        {{"main_1_3_weak", "every tame Z_{p-1}(P) < P&Q < P has N_G(P&Q)/C_G(P&Q) a p-group", controls, {"weak"}},
         [](C& c, O& o) { check_tame(c, o, false, true, true, false); }},
        {{"cor_1_5", "|P&Q| <= |Z_{p-1}(P)| for all distinct Sylow P, Q", controls, {}},
         [](C& c, O& o) { check_bound(c, o, c.zp1().order(), "|Z_{p-1}(P)|"); }},
        {{"cor_1_6", "every tame Z_{p-1}(P) < P&Q has p-nilpotent normalizer", p_nilpotent, {}},
         [](C& c, O& o) { check_tame(c, o, false, false, false, true); }},
        {{"thm_1_8", "every tame Z*(P) < P&Q < P has p-nilpotent normalizer", controls, {}},
         [](C& c, O& o) { check_tame(c, o, true, true, false, false); }},
        {{"thm_1_8_weak", "every tame Z*(P) < P&Q < P has N_G(P&Q)/C_G(P&Q) a p-group", controls, {"weak"}},
         [](C& c, O& o) { check_tame(c, o, true, true, true, false); }},
        {{"cor_1_9", "every tame Z*(P) < P&Q has p-nilpotent normalizer", p_nilpotent, {}},
         [](C& c, O& o) { check_tame(c, o, true, false, false, true); }},
        {{"thm_1_10", "some nontrivial K <= Z*(P) is weakly closed in P",
          "N_G(K) controls p-transfer in G for every such K", {}},
         check_thm_1_10},
        {{"cor_1_11", "|P&Q| <= |Z*(P)| for all distinct Sylow P, Q", controls, {}},
         [](C& c, O& o) { check_bound(c, o, c.zstar().order(), "|Z*(P)|"); }},
        {{"prop_3_4", "every characteristic subgroup of P containing Z_{p-1}(P) is weakly closed in P", controls, {}},
         check_prop_3_4},
        {{"aux_gruen_instance", "Z_{p-1}(P) is weakly closed in P", "N_G(Z_{p-1}(P)) controls p-transfer in G", {}},
         check_gruen},
        {{"lemma_3_1", "for some normal Z <= P: N_G(P)/Z controls in G/Z, and [Z,g,...,g]_{p-1} <= Phi(Z) for g in P or Z <= Phi(P)",
          controls, {"Z candidates: O_p(G), Omega(O_p(G)), Z(P)&O_p(G) or explicit"}},
         check_lemma_3_1},
        {{"lemma_3_2", "N_G(P) does not control and N_G(P)/Z controls in G/Z for some normal Z <= P",
          "Z is not contained in any index-p normal M of N_G(P) containing V(G)", {}},
         check_lemma_3_2},
        {{"thm_4_1", "|P&Q| <= p^(p-1) for all distinct Sylow P, Q", controls, {}},
         [](C& c, O& o) { check_bound(c, o, ipow(c.p(), static_cast<unsigned>(c.p() - 1)), "p^(p-1)"); }},
        {{"thm_4_2", "class(P) = p and N_G(P) is p-nilpotent and maximal", "G is p-solvable of length 1",
          {"length reading: p'-length (default) and p-length"}},
         check_thm_4_2},
        {{"thm_4_3", "class(P) = p and G has p+1 Sylow p-subgroups", controls + " or O_p(G) != 1", {}}, check_thm_4_3},
        {{"thm_4_4_janko", "some nilpotent maximal M has a Sylow 2-subgroup of class <= 2", "G is solvable", {}},
         [](C& c, O& o) { check_nilpotent_maximal(c, o, false); }},
        {{"thm_4_5", "some nilpotent maximal M has a Sylow 2-subgroup of norm length <= 2", "G is solvable", {}},
         [](C& c, O& o) { check_nilpotent_maximal(c, o, true); }},
        {{"thm_4_8", "p odd and P is p-central of height p-2 or p^2-central of height p-1", controls,
          {"order reading: exactly p^i (default) and dividing p^i"}},
         check_thm_4_8},
        {{"thm_4_10_property", "the p-group G is p-central of height p-2 or p^2-central of height p-1",
          "G/Omega(G) is p-central of height p-2 or p^2-central of height p-1",
          {"order reading: exactly p^i (default) and dividing p^i"}},
         check_thm_4_10},
    };
  }();
  return table;
}

constexpr const char* kThm410 = "thm_4_10_property";

bool applicable_in_scan(const std::string& id, const PermGroup& G, std::uint64_t p) {
  if (id == "thm_4_4_janko" || id == "thm_4_5") return p == prime_divisors(G.order()).front();
  if (id == kThm410) return p != 2 && is_p_group(G, p);
  return true;
}

CheckerRun run_in_context(CheckContext& c, std::size_t index, const CheckerParams& params, const std::string& label) {
  const CheckerEntry& e = entries()[index];
  CheckerRun run;
  run.verdict.checker_id = e.info.id;
  run.verdict.group_label = label;
  run.verdict.prime = c.p();
  Outcome o{run.verdict, run.discrepancies, params};
  try {
    e.fn(c, o);
    if (params.corrupt_conclusion) {
      run.verdict.conclusion_holds = !run.verdict.conclusion_holds;
      o.note("test mode: conclusion negated");
    }
    run.verdict.verdict = verdict_of(run.verdict.hypothesis_holds, run.verdict.conclusion_holds);
  } catch (const ResourceCapExceeded& ex) {
    run.verdict.hypothesis_holds = false;
    run.verdict.conclusion_holds = false;
    run.verdict.verdict = Verdict::skipped_cap;
    run.discrepancies.clear();
    o.note(std::string("resource cap: ") + ex.what());
  }
  return run;
}

void validate(const std::string& id, const PermGroup& G, std::uint64_t p) {
  if (!is_known_checker(id)) throw InvalidArgument("unknown checker \"" + id + "\"");
  if (!is_prime(p) || G.order() % p != 0) throw InvalidArgument("p must be a prime dividing |G|");
  if (id == kThm410 && (p == 2 || !is_p_group(G, p)))
    throw InvalidArgument("thm_4_10_property requires G to be a p-group for an odd prime p");
}

}  // namespace

const std::vector<CheckerInfo>& checker_catalog() {
  static const std::vector<CheckerInfo> infos = [] {
    std::vector<CheckerInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_known_checker(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return true;
  return false;
}

std::size_t checker_index(const std::string& id) {
  for (std::size_t i = 0; i < entries().size(); ++i)
    if (entries()[i].info.id == id) return i;
  throw InvalidArgument("unknown checker \"" + id + "\"");
}

CheckerRun run_checker_detailed(const std::string& id, const PermGroup& G, std::uint64_t p, const CheckerParams& params,
                                const std::string& label) {
  validate(id, G, p);
  CheckContext c(G, p);
  CheckerRun run = run_in_context(c, checker_index(id), params, label);
  run.control = c.stats;
  return run;
}

CheckerVerdict run_checker(const std::string& id, const PermGroup& G, std::uint64_t p, const CheckerParams& params,
                           const std::string& label) {
  return run_checker_detailed(id, G, p, params, label).verdict;
}

std::size_t TheoremReport::count(Verdict v) const {
  auto it = summary.find(to_string(v));
  return it == summary.end() ? 0 : it->second;
}

std::string TheoremReport::to_text() const {
  std::ostringstream out;
  out << "corpus: " << corpus_description << "\n";
  out << "verdicts: " << verdicts.size() << "\n";
  for (const auto& [name, n] : summary) out << "  " << name << ": " << n << "\n";

  std::map<std::string, std::map<std::string, std::size_t>> per_checker;
  for (const auto& v : verdicts) ++per_checker[v.checker_id][to_string(v.verdict)];
  if (!verdicts.empty()) {
    out << "per checker (implication_ok / vacuous / VIOLATION / skipped:cap):\n";
    for (const auto& info : checker_catalog()) {
      auto it = per_checker.find(info.id);
      if (it == per_checker.end()) continue;
      auto& m = it->second;
      out << "  " << info.id << ": " << m["implication_ok"] << " / " << m["vacuous"] << " / " << m["VIOLATION"]
          << " / " << m["skipped:cap"] << "\n";
    }
  }
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations)
    out << "  " << v.checker_id << " " << v.group_label << " p=" << v.prime << " " << v.witness_summary() << "\n";
  out << "interpretation discrepancies: " << discrepancies.size() << "\n";
  for (const auto& d : discrepancies)
    out << "  [" << d.kind << "] " << d.checker_id << " " << d.group_label << " p=" << d.prime << ": " << d.detail
        << "\n";
  out << "control evaluations: " << control.evaluations
      << " (focal/quotient disagreements: " << control.focal_quotient_disagreements
      << ", tate disagreements: " << control.tate_disagreements << ")\n";
  out << "non-controlling (G, p) with transfer witnesses: " << lemma23.size() << "\n";
  for (const auto& l : lemma23)
    out << "  " << l.group_label << " p=" << l.prime << " |M|=" << l.m_order << " steps=" << l.steps
        << (l.verified ? " verified" : (l.capped ? " skipped: " : " FAILED: ") + l.failure) << "\n";
  return out.str();
}

std::string TheoremReport::to_records() const {
  std::string out;
  for (const auto& v : verdicts) {
    nlohmann::ordered_json j;
    j["checker_id"] = v.checker_id;
    j["group_label"] = v.group_label;
    j["prime"] = v.prime;
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["conclusion_holds"] = v.conclusion_holds;
    j["verdict"] = to_string(v.verdict);
    j["witness"] = v.witness_summary();
    j["interpretation_notes"] = v.interpretation_notes;
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

struct JobResult {
  std::vector<CheckerVerdict> verdicts;
  std::vector<Discrepancy> discrepancies;
  ControlStats control;
  std::optional<Lemma23Record> lemma23;
};

JobResult run_job(const CorpusGroup& entry, std::uint64_t p, const std::vector<std::size_t>& checkers,
                  const ScanOptions& options) {
  JobResult r;
  CheckContext c(entry.group, p);
  CheckerParams params;
  params.maximal_subgroups = entry.maximal_subgroups;
  params.corrupt_conclusion = options.corrupt_conclusions;
  for (auto idx : checkers) {
    if (!applicable_in_scan(entries()[idx].info.id, entry.group, p)) continue;
    CheckerRun run = run_in_context(c, idx, params, entry.label);
    r.verdicts.push_back(std::move(run.verdict));
    for (auto& d : run.discrepancies) r.discrepancies.push_back(std::move(d));
  }
  try {
    if (!c.np_controls()) {
      const Lemma23Witness& w = c.lemma23();
      Lemma23Record rec{entry.label, p, w.verified(), false, 0, w.steps.size(), w.failure};
      if (!w.candidates.empty()) rec.m_order = w.candidates.front().order();
      r.lemma23 = rec;
    }
  } catch (const ResourceCapExceeded& ex) {
    r.lemma23 = Lemma23Record{entry.label, p, false, true, 0, 0, std::string("resource cap: ") + ex.what()};
  }
  r.control = c.stats;
  return r;
}

}  // namespace

TheoremReport scan_corpus(const std::vector<CorpusGroup>& corpus, const ScanOptions& options) {
  std::vector<std::size_t> checkers;
  if (options.checker_ids.empty()) {
    for (std::size_t i = 0; i < entries().size(); ++i) checkers.push_back(i);
  } else {
    for (const auto& id : options.checker_ids) checkers.push_back(checker_index(id));
    std::sort(checkers.begin(), checkers.end());
    checkers.erase(std::unique(checkers.begin(), checkers.end()), checkers.end());
  }
  if (options.prime && !is_prime(*options.prime)) throw InvalidArgument("scan prime must be prime");

  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (auto p : prime_divisors(corpus[i].group.order()))
      if (!options.prime || *options.prime == p) jobs.emplace_back(i, p);

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        results[k] = run_job(corpus[jobs[k].first], jobs[k].second, checkers, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(jobs.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  TheoremReport report;
  report.corpus_description = std::to_string(corpus.size()) + " groups, " + std::to_string(jobs.size()) +
                              " (group, prime) pairs, " + std::to_string(checkers.size()) + " checkers";
  for (auto v : {Verdict::implication_ok, Verdict::vacuous, Verdict::violation, Verdict::skipped_cap})
    report.summary[to_string(v)] = 0;
  // Jobs are already in (corpus position, prime) order and checkers in catalog order.
  for (auto& r : results) {
    for (auto& v : r.verdicts) {
      ++report.summary[to_string(v.verdict)];
      if (v.verdict == Verdict::violation) report.violations.push_back(v);
      report.verdicts.push_back(std::move(v));
    }
    for (auto& d : r.discrepancies) report.discrepancies.push_back(std::move(d));
    report.control += r.control;
    if (r.lemma23) report.lemma23.push_back(std::move(*r.lemma23));
  }
  return report;
}

namespace {

struct FactSpec {
  const char* id;
  const char* statement;
  std::function<std::pair<bool, std::string>()> check;
};

}  // namespace

std::vector<WitnessFact> verify_witness_facts() {
  const PermGroup S4 = symmetric(4);
  auto s4_sylow = [&] { return all_sylow_subgroups(S4, 2); };
  const std::vector<FactSpec> facts{
      {"s4_sylow_wreath", "a Sylow 2-subgroup of S4 is isomorphic to Z2 wr Z2",
       [&] {
         const PermGroup P = sylow_subgroup(S4, 2);
         return std::pair{is_isomorphic(P, wreath_cyclic(2)), describe(P)};
       }},
      {"s4_sylow_index_2", "|P : P&Q| = 2 for distinct Sylow 2-subgroups P, Q of S4",
       [&] {
         const auto fam = s4_sylow();
         bool ok = fam.members.size() == 3;
         for (const auto& I : sylow_intersections(fam))
           ok = ok && fam.members[I.first].order() == 2 * I.subgroup.order();
         return std::pair{ok, std::to_string(fam.members.size()) + " Sylow subgroups"};
       }},
      {"s4_tame_v4", "P&Q = V4 is a tame intersection in S4 with N_G(V4) = S4 not 2-nilpotent",
       [&] {
         const auto fam = s4_sylow();
         bool ok = true;
         for (std::size_t i = 0; i < fam.members.size(); ++i) {
           if (i == fam.base) continue;
           const auto r = is_tame_intersection(S4, fam.base_subgroup(), fam.members[i]);
           ok = ok && r.tame && is_isomorphic(r.D, elementary_abelian(2, 2)) && same_group(r.normalizer, S4) &&
                !r.normalizer_p_nilpotent;
         }
         return std::pair{ok, std::string("checked every partner Q != P")};
       }},
      {"s4_no_control", "N_G(P) does not control 2-transfer in S4",
       [&] {
         const PermGroup P = sylow_subgroup(S4, 2);
         const auto r = controls_p_transfer(S4, normalizer(S4, P), 2);
         return std::pair{!r.controls && r.consistent(), "|P&G'| = " + std::to_string(r.focal_G.order()) +
                                                             ", |P&N'| = " + std::to_string(r.focal_N.order())};
       }},
      {"s4_yoshida_fails", "the Sylow 2-subgroup of S4 has a quotient isomorphic to Z2 wr Z2",
       [&] {
         const CheckerVerdict v = run_checker("yoshida", S4, 2, {}, "S4");
         return std::pair{!v.hypothesis_holds, v.witness_summary()};
       }},
      {"s4_op_in_z2", "O_2(S4) <= Z_2(P)",
       [&] {
         const PermGroup P = sylow_subgroup(S4, 2);
         const PermGroup O = o_p(S4, 2);
         return std::pair{O.order() == 4 && is_subgroup(z_k(P, 2), O), describe(O)};
       }},
      {"s4_op_not_in_center", "O_2(S4) is not contained in Z(P)",
       [&] {
         const PermGroup P = sylow_subgroup(S4, 2);
         return std::pair{!is_subgroup(center(P), o_p(S4, 2)), "|Z(P)| = " + std::to_string(center(P).order())};
       }},
      {"d8_norm_index_4", "|D8 : Z*(D8)| = |D8 : Z(D8)| = 4",
       [] {
         const PermGroup D8 = dihedral(8);
         const PermGroup Zs = norm(D8);
         return std::pair{D8.order() / Zs.order() == 4 && same_group(Zs, center(D8)), describe(Zs)};
       }},
      {"q16_class_3", "Q16 has nilpotency class 3",
       [] {
         const auto c = nilpotency_class(generalized_quaternion(16));
         return std::pair{c && *c == 3, c ? std::to_string(*c) : std::string("not nilpotent")};
       }},
      {"q16_norm_length_2", "Q16 has norm length 2",
       [] {
         const unsigned n = norm_length(generalized_quaternion(16));
         return std::pair{n == 2, std::to_string(n)};
       }},
      {"d16_norm_length_3", "D16 has norm length 3",
       [] {
         const unsigned n = norm_length(dihedral(16));
         return std::pair{n == 3, std::to_string(n)};
       }},
      {"psl217_sylow_d16", "a Sylow 2-subgroup of PSL(2,17) is isomorphic to D16",
       [] {
         const PermGroup P = sylow_subgroup(psl2(17), 2);
         return std::pair{is_isomorphic(P, dihedral(16)), describe(P)};
       }},
      {"psl217_sylow_norm_length_3", "the Sylow 2-subgroup of PSL(2,17) has norm length 3",
       [] {
         const unsigned n = norm_length(sylow_subgroup(psl2(17), 2));
         return std::pair{n == 3, std::to_string(n)};
       }},
      {"psl217_sylow_maximal", "the Sylow 2-subgroup of PSL(2,17) is a maximal subgroup",
       [] {
         const PermGroup G = psl2(17);
         const PermGroup P = sylow_subgroup(G, 2);
         return std::pair{is_maximal(G, P) && same_group(normalizer(G, P), P),
                          "|G| = " + std::to_string(G.order()) + ", |P| = " + std::to_string(P.order())};
       }},
  };

  std::vector<WitnessFact> out;
  for (const auto& f : facts) {
    WitnessFact w{f.id, f.statement, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = f.check();
      w.passed = ok;
      w.detail = std::move(detail);
    } catch (const std::exception& ex) {
      w.detail = std::string("error: ") + ex.what();
    }
    w.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace pgt
