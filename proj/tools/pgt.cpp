#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgt/arith.hpp"
#include "pgt/builtins.hpp"
#include "pgt/catalog.hpp"
#include "pgt/cosets.hpp"
#include "pgt/errors.hpp"
#include "pgt/harness.hpp"
#include "pgt/structure.hpp"
#include "pgt/subgroups.hpp"
#include "pgt/sylow.hpp"
#include "pgt/transfer.hpp"

namespace {

using namespace pgt;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapped = 3;

struct GroupSource {
  std::string catalog;
  std::size_t degree = 0;
  std::vector<std::string> cycles;
};

/// A label from --catalog, a builtin label, or "-" with --degree/--gen cycle sugar.
CorpusGroup resolve_group(const std::string& selector, const GroupSource& src) {
  if (selector == "-" || selector.empty()) {
    if (src.degree == 0) throw InvalidArgument("custom group needs --degree and --gen");
    std::vector<Permutation> gens;
    for (const auto& c : src.cycles) gens.push_back(Permutation::from_cycles(src.degree, c));
    return {"custom", PermGroup(src.degree, std::move(gens)), {}};
  }
  if (!src.catalog.empty())
    for (const auto& e : load_catalog(src.catalog))
      if (e.label == selector) return e.corpus_group();
  return {selector, builtin_group(selector), {}};
}

std::string order_of(const PermGroup& H) { return std::to_string(H.order()); }

void analyze_prime(const PermGroup& G, std::uint64_t p) {
  std::cout << "prime: " << p << "\n";
  const SylowFamily fam = all_sylow_subgroups(G, p);
  const PermGroup& P = fam.base_subgroup();
  const PermGroup& N = fam.normalizer;
  std::cout << "|P| = " << P.order() << "\n";
  std::cout << "Sylow count: " << fam.members.size() << "\n";
  std::cout << "|N_G(P)| = " << N.order() << "\n";
  std::cout << "class(P) = " << *nilpotency_class(P) << "\n";
  std::cout << "|Z(P)| = " << order_of(center(P)) << "\n";
  const PermGroup Zp1 = z_k(P, static_cast<unsigned>(p - 1));
  std::cout << "|Z_{p-1}(P)| = " << order_of(Zp1) << "\n";
  const PermGroup Zs = norm(P);
  std::cout << "|Z*(P)| = " << order_of(Zs) << "\n";
  std::cout << "norm_length(P) = " << norm_length(P) << "\n";
  std::cout << "|Phi(P)| = " << order_of(frattini_p(P, p)) << "\n";
  std::cout << "|Omega(P)| = " << order_of(omega(P, p)) << "\n";
  std::cout << "|O_p(G)| = " << order_of(o_p(G, p)) << "\n";
  std::cout << "|O^p(G)| = " << order_of(o_upper_p(G, p)) << "\n";
  std::cout << "|A^p(G)| = " << order_of(a_p(G, p)) << "\n";
  std::cout << "p-nilpotent: " << (is_p_nilpotent(G, p) ? "true" : "false") << "\n";
  std::cout << "focal subgroup: |P&G'| = " << order_of(focal_subgroup(G, P)) << "\n";
  std::cout << "max Sylow intersection: " << max_intersection_order(fam) << "\n";
  const auto tame = tame_intersections_between(G, fam, PermGroup::trivial(G.degree()), true);
  std::cout << "tame intersections below P: " << tame.size() << "\n";
  for (const auto& r : tame)
    std::cout << "  |D| = " << r.D.order() << ", |N_G(D)| = " << r.normalizer.order()
              << ", N_G(D) p-nilpotent: " << (r.normalizer_p_nilpotent ? "true" : "false") << "\n";
  const ControlReport cr = controls_p_transfer(G, N, p);
  std::cout << "controls: " << (cr.controls ? "true" : "false") << "\n";
  std::cout << "N_G(P) maximal: " << (N.order() < G.order() && is_maximal(G, N) ? "true" : "false") << "\n";
}

int cmd_analyze(const std::string& selector, std::optional<std::uint64_t> prime, const GroupSource& src) {
  const CorpusGroup cg = resolve_group(selector, src);
  const PermGroup& G = cg.group;
  std::cout << "group: " << cg.label << "\n";
  std::cout << "degree: " << G.degree() << "\n";
  std::cout << "order: " << G.order() << "\n";
  std::cout << "solvable: " << (is_solvable(G) ? "true" : "false") << "\n";
  std::cout << "nilpotent: " << (is_nilpotent(G) ? "true" : "false") << "\n";
  if (prime && (!is_prime(*prime) || G.order() % *prime != 0))
    throw InvalidArgument("--prime must be a prime dividing |G|");
  for (auto p : prime_divisors(G.order())) {
    if (prime && *prime != p) continue;
    analyze_prime(G, p);
  }
  return kExitPass;
}

void print_verdict(const CheckerVerdict& v, ReportFormat format) {
  if (format == ReportFormat::records) {
    TheoremReport r;
    r.verdicts.push_back(v);
    std::cout << r.to_records();
    return;
  }
  std::cout << "checker: " << v.checker_id << "\n"
            << "group: " << v.group_label << "\n"
            << "prime: " << v.prime << "\n"
            << "hypothesis: " << (v.hypothesis_holds ? "true" : "false") << "\n"
            << "conclusion: " << (v.conclusion_holds ? "true" : "false") << "\n"
            << "verdict: " << to_string(v.verdict) << "\n"
            << "witness: " << v.witness_summary() << "\n";
  for (const auto& n : v.interpretation_notes) std::cout << "note: " << n << "\n";
}

int cmd_verify(const std::string& checker, const std::string& selector, std::uint64_t prime, ReportFormat format,
               bool strict_caps, bool corrupt, const GroupSource& src) {
  const CorpusGroup cg = resolve_group(selector, src);
  CheckerParams params;
  params.maximal_subgroups = cg.maximal_subgroups;
  params.corrupt_conclusion = corrupt;
  const CheckerVerdict v = run_checker(checker, cg.group, prime, params, cg.label);
  print_verdict(v, format);
  if (v.verdict == Verdict::violation) return kExitViolation;
  if (v.verdict == Verdict::skipped_cap && strict_caps) return kExitCapped;
  return kExitPass;
}

int cmd_scan(const std::string& catalog, const ScanOptions& options, ReportFormat format, const std::string& output,
             bool strict_caps) {
  const std::vector<CatalogEntry> entries = catalog.empty() ? default_corpus() : load_catalog(catalog);
  const TheoremReport report = scan_corpus(to_corpus(entries), options);
  if (output.empty())
    std::cout << render_report(report, format);
  else
    save_report(report, output, format);
  if (!report.violations.empty()) return kExitViolation;
  bool capped = report.count(Verdict::skipped_cap) > 0;
  for (const auto& l : report.lemma23) {
    if (!l.verified && !l.capped) return kExitViolation;
    capped = capped || l.capped;
  }
  if (strict_caps && capped) return kExitCapped;
  return kExitPass;
}

int cmd_witness() {
  bool all = true;
  for (const auto& f : verify_witness_facts()) {
    all = all && f.passed;
    std::cout << (f.passed ? "PASS " : "FAIL ") << f.id << " (" << f.seconds << " s): " << f.statement << " ["
              << f.detail << "]\n";
  }
  return all ? kExitPass : kExitViolation;
}

int cmd_builtin(bool list, bool dump, const std::string& label) {
  if (list) {
    for (const auto& line : builtin_families()) std::cout << line << "\n";
    return kExitPass;
  }
  if (dump) {
    write_catalog(std::cout, default_corpus());
    return kExitPass;
  }
  if (label.empty()) throw InvalidArgument("builtin: give a label, --list or --dump-corpus");
  std::cout << catalog_line(entry_from_group(label, builtin_group(label))) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation group toolkit: transfer, Sylow structure and theorem checks"};
  app.require_subcommand(1);

  Limits caps = limits_from_environment();
  app.add_option("--element-cap", caps.element_cap, "Element enumeration cap (env PGT_ELEMENT_CAP)");
  app.add_option("--isomorphism-cap", caps.isomorphism_cap, "Largest order for isomorphism tests");
  app.add_option("--automorphism-cap", caps.automorphism_cap, "Largest order for automorphism enumeration");
  app.add_option("--subgroup-cap", caps.subgroup_enumeration_cap, "Largest order for subgroup enumeration");
  app.add_option("--sylow-cap", caps.sylow_family_cap, "Largest Sylow family");

  GroupSource src;
  auto add_group_source = [&](CLI::App* sub) {
    sub->add_option("--catalog", src.catalog, "Catalog file to resolve labels against");
    sub->add_option("--degree", src.degree, "Degree of a custom group (selector \"-\")");
    sub->add_option("--gen", src.cycles, "Generator of a custom group in cycle notation, e.g. \"(0 1 2)(3 4)\"");
  };

  std::string selector, checker, format_name = "text", output;
  std::optional<std::uint64_t> prime;
  bool strict_caps = false, corrupt = false;

  auto* analyze = app.add_subcommand("analyze", "Structural summary of a group");
  analyze->add_option("group", selector, "Builtin or catalog label, or \"-\"")->required();
  analyze->add_option("--prime", prime, "Restrict to one prime");
  add_group_source(analyze);

  std::uint64_t verify_prime = 0;
  auto* verify = app.add_subcommand("verify", "Run one checker on one group");
  verify->add_option("checker", checker, "Checker id")->required();
  verify->add_option("group", selector, "Builtin or catalog label, or \"-\"")->required();
  verify->add_option("prime", verify_prime, "Prime dividing |G|")->required();
  verify->add_option("--format", format_name, "text or records");
  verify->add_flag("--strict-caps", strict_caps, "Exit 3 when a resource cap was hit");
  verify->add_flag("--corrupt-conclusions", corrupt)->group("");
  add_group_source(verify);

  ScanOptions scan_options;
  std::string scan_catalog;
  auto* scan = app.add_subcommand("scan", "Run checkers over a catalog (default: the shipped corpus)");
  scan->add_option("--catalog", scan_catalog, "Catalog file");
  scan->add_option("--checker", scan_options.checker_ids, "Checker id (repeatable; default all)");
  scan->add_option("--prime", scan_options.prime, "Only this prime");
  scan->add_option("--jobs", scan_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--format", format_name, "text or records");
  scan->add_option("--output", output, "Write the report to a file");
  scan->add_flag("--strict-caps", strict_caps, "Exit 3 when a resource cap was hit");
  scan->add_flag("--corrupt-conclusions", scan_options.corrupt_conclusions)->group("");

  app.add_subcommand("witness", "Recompute the hard-coded witness facts");

  bool list = false, dump = false;
  std::string builtin_label;
  auto* builtin = app.add_subcommand("builtin", "Builtin groups");
  builtin->add_flag("--list", list, "List label families");
  builtin->add_flag("--dump-corpus", dump, "Print the shipped corpus as a catalog");
  builtin->add_option("label", builtin_label, "Print one builtin as a catalog record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    set_limits(caps);
    const ReportFormat format = parse_report_format(format_name);
    if (*analyze) return cmd_analyze(selector, prime, src);
    if (*verify) return cmd_verify(checker, selector, verify_prime, format, strict_caps, corrupt, src);
    if (*scan) return cmd_scan(scan_catalog, scan_options, format, output, strict_caps);
    if (*builtin) return cmd_builtin(list, dump, builtin_label);
    return cmd_witness();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCapped;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
