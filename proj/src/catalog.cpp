#include "pgt/catalog.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "pgt/builtins.hpp"
#include "pgt/structure.hpp"
#include "pgt/sylow.hpp"

namespace pgt {

using nlohmann::ordered_json;

CatalogError::CatalogError(const std::string& source, std::size_t line, const std::string& message)
    : InvalidArgument(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<Permutation> to_permutations(std::size_t degree, const std::vector<ImageArray>& arrays) {
  std::vector<Permutation> out;
  for (const auto& a : arrays) {
    if (a.size() != degree)
      throw InvalidArgument("generator has " + std::to_string(a.size()) + " images, expected " + std::to_string(degree));
    out.emplace_back(std::vector<Point>(a.begin(), a.end()));
  }
  return out;
}

std::vector<ImageArray> to_arrays(const PermGroup& G) {
  std::vector<ImageArray> out;
  for (const auto& g : G.generators()) {
    auto im = g.images();
    out.emplace_back(im.begin(), im.end());
  }
  return out;
}

CatalogEntry parse_entry(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  if (!j.is_object()) throw InvalidArgument("record is not a JSON object");
  CatalogEntry e;
  e.label = j.at("label").get<std::string>();
  if (e.label.empty()) throw InvalidArgument("empty label");
  e.degree = j.at("degree").get<std::size_t>();
  if (e.degree == 0) throw InvalidArgument("degree must be positive");
  e.generators = j.at("generators").get<std::vector<ImageArray>>();
  if (j.contains("tags")) e.tags = j["tags"].get<std::vector<std::string>>();
  if (j.contains("annotations")) {
    const auto& a = j["annotations"];
    if (!a.is_object()) throw InvalidArgument("annotations must be an object");
    if (a.contains("maximal_subgroups"))
      e.maximal_subgroups = a["maximal_subgroups"].get<std::vector<std::vector<ImageArray>>>();
  }
  if (j.contains("expected_order")) e.expected_order = j["expected_order"].get<std::uint64_t>();

  const PermGroup G = e.group();
  if (e.expected_order && G.order() != *e.expected_order)
    throw InvalidArgument("group has order " + std::to_string(G.order()) + ", expected " +
                          std::to_string(*e.expected_order));
  for (const auto& m : e.maximal_subgroups) to_permutations(e.degree, m);
  return e;
}

}  // namespace

PermGroup CatalogEntry::group() const { return PermGroup(degree, to_permutations(degree, generators)); }

CorpusGroup CatalogEntry::corpus_group() const {
  CorpusGroup c{label, group(), {}};
  for (const auto& m : maximal_subgroups) c.maximal_subgroups.emplace_back(degree, to_permutations(degree, m));
  return c;
}

CatalogEntry entry_from_group(const std::string& label, const PermGroup& G, std::vector<std::string> tags) {
  CatalogEntry e;
  e.label = label;
  e.degree = G.degree();
  e.generators = to_arrays(G);
  e.tags = std::move(tags);
  e.expected_order = G.order();
  return e;
}

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_entry(line));
    } catch (const ordered_json::exception& ex) {
      throw CatalogError(source, number, ex.what());
    } catch (const InvalidArgument& ex) {
      throw CatalogError(source, number, ex.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open catalog \"" + path + "\"");
  return parse_catalog(in, path);
}

std::string catalog_line(const CatalogEntry& e) {
  ordered_json j;
  j["label"] = e.label;
  j["degree"] = e.degree;
  j["generators"] = e.generators;
  j["tags"] = e.tags;
  if (!e.maximal_subgroups.empty()) j["annotations"] = {{"maximal_subgroups", e.maximal_subgroups}};
  if (e.expected_order) j["expected_order"] = *e.expected_order;
  return j.dump();
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) out << catalog_line(e) << "\n";
}

void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write \"" + path + "\"");
  write_catalog(out, entries);
}

std::vector<CatalogEntry> default_corpus() {
  static const char* const labels[] = {
      // symmetric, alternating, cyclic, dihedral for small n
      "S2", "S3", "S4", "S5", "S6", "A4", "A5", "A6", "C2", "C3", "C4", "C5", "C6", "C8", "C9", "C25", "D8", "D10",
      "D12", "D16",
      // p-groups for p in {2, 3, 5}
      "Q8", "Q16", "E2^2", "E2^3", "E2^4", "E3^2", "E3^3", "E5^2", "C4xC2", "D8xC2", "C2wrC2wrC2", "C3wrC3", "He3",
      "He5", "C9xC3",
      // mixed solvable groups
      "SL2_3", "GL2_3", "A4xC2", "S4xC2", "S3xS3", "S3xC3", "C3wrC2", "C3wrS3", "S3wrC2", "F20", "F21", "AGL1_7",
      "C3wrA4",
      // nonsolvable groups
      "PSL2_7", "PSL2_11", "PSL2_13", "PSL2_17", "SL2_5", "A5xC2"};
  std::vector<CatalogEntry> out;
  for (const char* label : labels) {
    const PermGroup G = builtin_group(label);
    std::vector<std::string> tags{"builtin"};
    if (p_group_prime(G)) tags.push_back("p-group");
    tags.push_back(is_solvable(G) ? "solvable" : "nonsolvable");
    CatalogEntry e = entry_from_group(label, G, std::move(tags));
    const std::string l = label;
    if (l == "S4" || l == "PSL2_17") e.maximal_subgroups.push_back(to_arrays(sylow_subgroup(G, 2)));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusGroup> to_corpus(const std::vector<CatalogEntry>& entries) {
  std::vector<CorpusGroup> out;
  for (const auto& e : entries) out.push_back(e.corpus_group());
  return out;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "records") return ReportFormat::records;
  throw InvalidArgument("unknown report format \"" + name + "\" (expected text or records)");
}

std::string render_report(const TheoremReport& report, ReportFormat format) {
  return format == ReportFormat::text ? report.to_text() : report.to_records();
}

void save_report(const TheoremReport& report, const std::string& path, ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write \"" + path + "\"");
  out << render_report(report, format);
}

}  // namespace pgt
