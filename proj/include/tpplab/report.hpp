#pragma once

#include <string>
#include <vector>

#include "tpplab/catalog.hpp"
#include "tpplab/classifier.hpp"
#include "tpplab/search.hpp"

namespace tpplab {

// Outcome of checking one group's computed rho0 against every applicable
// theorem bound and against the declared table row.
struct BoundOutcome {
  PredictedBound bound;
  bool holds = false;
  std::string detail;  // exact integer comparison, e.g. "1*2 < 8"
};

struct BoundCheckResult {
  std::string label;
  unsigned order = 0;
  unsigned center_order = 0;
  GroupClassification classification;
  std::uint64_t beta0 = 0;
  Rational computed_rho0;
  bool inconclusive = false;     // budget exhausted or skipped (deep row)
  bool skipped_deep = false;
  bool matches_declared = false;
  Rational declared_rho0;
  std::vector<BoundOutcome> bounds;
  // Witness triples as index lists (S, T, U), canonical order.
  std::vector<std::array<std::vector<unsigned>, 3>> witnesses;
  std::vector<std::string> discrepancies;
  bool hard_failure = false;     // fingerprint mismatch etc.
  SearchStats stats;
};

struct VerifyOptions {
  SearchBudget budget;
  bool deep = false;               // include deep-only rows
  bool allow_inconclusive = false;
};

struct VerifyOutcome {
  std::vector<BoundCheckResult> results;
  int exit_code = 0;  // 0 ok, 1 violation/mismatch, 2 inconclusive
};

VerifyOutcome run_verify(const Catalog& catalog, const std::vector<std::string>& labels,
                         const VerifyOptions& options);
BoundCheckResult verify_group(const Catalog& catalog, const CatalogEntry& entry,
                              const VerifyOptions& options);
std::string render_verify_text(const VerifyOutcome& outcome);

// --- table reproduction --------------------------------------------------

struct TableRow {
  std::string label;
  unsigned order = 0;
  std::string structure;
  unsigned z_computed = 0;
  bool z_matches = false;
  std::string sqrt_display;       // k, sqrt(d) or k sqrt(d), rendered exactly
  std::string cd_declared;
  bool cd_check_ok = false;
  std::string rho0;               // computed, or "?" when inconclusive
  bool rho0_matches = false;
  bool inconclusive = false;
};

struct TableReport {
  int table_no = 0;
  std::vector<TableRow> rows;
  bool any_mismatch = false;
};

TableReport reproduce_table(const Catalog& catalog, int table_no, const VerifyOptions& options);
std::string render_table(const TableReport& report, const std::string& format);  // md|csv|json
std::vector<std::vector<std::string>> parse_table_csv(const std::string& text);

// |G:Z| as k*sqrt(d) with d squarefree; "2" or "2√2" style.
std::string sqrt_display_exact(std::uint64_t centre_index);

}  // namespace tpplab
