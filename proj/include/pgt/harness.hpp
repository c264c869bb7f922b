#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgt/perm_group.hpp"

namespace pgt {

enum class Verdict { implication_ok, vacuous, violation, skipped_cap };

/// "implication_ok", "vacuous", "VIOLATION", "skipped:cap".
std::string to_string(Verdict v);

struct CheckerInfo {
  std::string id;
  std::string hypothesis;
  std::string conclusion;
  std::vector<std::string> interpretation_flags;
};

/// Every checker, in report order.
const std::vector<CheckerInfo>& checker_catalog();
bool is_known_checker(const std::string& id);
/// Position in checker_catalog(); throws InvalidArgument for unknown ids.
std::size_t checker_index(const std::string& id);

struct CheckerParams {
  /// Replaces the default Z candidates of lemma_3_1 and lemma_3_2.
  std::optional<PermGroup> Z;
  /// Extra nilpotent maximal subgroup candidates for thm_4_4_janko and thm_4_5.
  std::vector<PermGroup> maximal_subgroups;
  /// Test mode: negates every conclusion.
  bool corrupt_conclusion = false;
};

struct CheckerVerdict {
  std::string checker_id;
  std::string group_label;
  std::uint64_t prime = 0;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  Verdict verdict = Verdict::vacuous;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> interpretation_notes;

  /// "key=value; key=value" over the witnesses.
  std::string witness_summary() const;
};

/// A verdict that changes under an alternative reading of a definition.
struct Discrepancy {
  std::string kind;
  std::string checker_id;
  std::string group_label;
  std::uint64_t prime = 0;
  std::string detail;
};

/// Tally of every controls_p_transfer evaluation made by the checkers.
struct ControlStats {
  std::size_t evaluations = 0;
  std::size_t focal_quotient_disagreements = 0;
  std::size_t tate_disagreements = 0;

  ControlStats& operator+=(const ControlStats& o);
};

/// Outcome of lemma23_witness for a (G, p) where N_G(P) does not control.
struct Lemma23Record {
  std::string group_label;
  std::uint64_t prime = 0;
  bool verified = false;
  bool capped = false;  // a resource cap stopped the witness search
  std::uint64_t m_order = 0;
  std::size_t steps = 0;
  std::string failure;
};

/// One checker run with its side products.
struct CheckerRun {
  CheckerVerdict verdict;
  std::vector<Discrepancy> discrepancies;
  ControlStats control;
};

/// Throws InvalidArgument for an unknown id, a p not dividing |G|, or (for
/// thm_4_10_property) G not a p-group or p = 2. Resource caps yield skipped:cap.
CheckerRun run_checker_detailed(const std::string& id, const PermGroup& G, std::uint64_t p,
                                const CheckerParams& params = {}, const std::string& label = "G");
CheckerVerdict run_checker(const std::string& id, const PermGroup& G, std::uint64_t p,
                           const CheckerParams& params = {}, const std::string& label = "G");

struct CorpusGroup {
  std::string label;
  PermGroup group;
  std::vector<PermGroup> maximal_subgroups;  // annotated witnesses, may be empty
};

struct ScanOptions {
  std::vector<std::string> checker_ids;  // empty: every checker
  std::optional<std::uint64_t> prime;    // empty: every prime dividing |G|
  unsigned jobs = 1;
  bool corrupt_conclusions = false;
};

struct TheoremReport {
  std::string corpus_description;
  /// Sorted by (corpus position, prime, checker order).
  std::vector<CheckerVerdict> verdicts;
  /// Verdict name -> count; every name is present.
  std::map<std::string, std::size_t> summary;
  std::vector<CheckerVerdict> violations;
  std::vector<Discrepancy> discrepancies;
  ControlStats control;
  std::vector<Lemma23Record> lemma23;

  std::size_t count(Verdict v) const;
  std::string to_text() const;
  /// One JSON object per line; identical input gives identical bytes.
  std::string to_records() const;
};

/// Runs the selected checkers on every (group, applicable prime). thm_4_4_janko
/// and thm_4_5 run once per group (at 2, or the least prime of an odd-order
/// group); thm_4_10_property only on p-groups with p odd.
TheoremReport scan_corpus(const std::vector<CorpusGroup>& corpus, const ScanOptions& options = {});

struct WitnessFact {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Hard-coded facts about S4, D8, Q16, D16 and PSL(2,17), each recomputed.
std::vector<WitnessFact> verify_witness_facts();

}  // namespace pgt
