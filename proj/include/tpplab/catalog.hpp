#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tpplab/rational.hpp"
#include "tpplab/recipes.hpp"
#include "tpplab/structure.hpp"

namespace tpplab {

// Invariant fingerprint used to validate catalog constructions. Not an
// isomorphism test; collisions across rows of one order are tolerated when
// every declared column still matches.
struct Fingerprint {
  unsigned order = 0;
  unsigned center_order = 0;
  unsigned commutator_order = 0;
  unsigned nilpotency_class = 0;
  std::vector<std::pair<unsigned, unsigned>> order_histogram;  // (element order, count)

  bool operator==(const Fingerprint& o) const = default;
  std::string str() const;
};

Fingerprint fingerprint_of(const GroupTable& g);

// One row of the published ratio tables.
struct CatalogEntry {
  std::string label;            // e.g. "[32, 49]"
  int table_no = 0;             // 1, 2 or 3
  unsigned declared_order = 0;
  unsigned declared_center_order = 0;
  std::uint64_t declared_centre_index = 0;  // |G : Z(G)|, the sqrt payload
  std::set<unsigned> declared_cd;
  Rational declared_rho0;
  std::string structure;        // structure description, metadata only
  std::string recipe_text;
  GroupRecipe recipe;
  Fingerprint fingerprint;
  bool deep_only = false;       // searched only under --deep
  bool cd_discrepancy = false;  // declared cd known to disagree with the criterion
};

class Catalog {
public:
  // Loads manifest.jsonl from a directory; generator payloads resolve
  // against the same directory.
  static Catalog load(const std::string& dir);
  static std::string default_dir();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& find(const std::string& label) const;
  bool has(const std::string& label) const;
  const std::string& dir() const { return dir_; }

  // Builds the group for a row and verifies its fingerprint and declared
  // order / |Z|; any mismatch is a hard FingerprintMismatch error.
  GroupTable build(const std::string& label) const;
  GroupTable build(const CatalogEntry& entry) const;

private:
  std::string dir_;
  std::vector<CatalogEntry> entries_;
};

// Multi-group container: sections headed by "@group <label>" followed by a
// group-table or perm-gens document. Duplicate labels are rejected.
std::vector<std::pair<std::string, GroupTable>> ingest_export(const std::string& text);
std::string read_text_file(const std::string& path);

// "[32, 49]", "32,49" and "[32,49]" all name the same row.
std::string normalize_label(const std::string& label);

}  // namespace tpplab
