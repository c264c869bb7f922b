#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgt/errors.hpp"
#include "pgt/harness.hpp"
#include "pgt/perm_group.hpp"

namespace pgt {

using ImageArray = std::vector<std::uint32_t>;

/// One catalog record. Generators are 0-indexed image arrays of length `degree`.
struct CatalogEntry {
  std::string label;
  std::size_t degree = 0;
  std::vector<ImageArray> generators;
  std::vector<std::string> tags;
  /// Annotated nilpotent maximal subgroups, each given by generator arrays.
  std::vector<std::vector<ImageArray>> maximal_subgroups;
  std::optional<std::uint64_t> expected_order;

  PermGroup group() const;
  CorpusGroup corpus_group() const;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Malformed catalog input; the message names the source and line.
class CatalogError : public InvalidArgument {
 public:
  CatalogError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

CatalogEntry entry_from_group(const std::string& label, const PermGroup& G, std::vector<std::string> tags = {});

/// Validates generator bijectivity, degrees and expected_order. Blank lines are skipped.
std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source = "<input>");
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// One JSON object per entry, fields in a fixed order.
std::string catalog_line(const CatalogEntry& entry);
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path);

/// The shipped corpus, built from builtin_group labels.
std::vector<CatalogEntry> default_corpus();
std::vector<CorpusGroup> to_corpus(const std::vector<CatalogEntry>& entries);

enum class ReportFormat { text, records };
/// "text" or "records"; throws InvalidArgument otherwise.
ReportFormat parse_report_format(const std::string& name);
std::string render_report(const TheoremReport& report, ReportFormat format);
void save_report(const TheoremReport& report, const std::string& path, ReportFormat format);

}  // namespace pgt
