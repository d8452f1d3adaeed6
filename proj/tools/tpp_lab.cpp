// tpp-lab: verification campaigns for subgroup TPP ratio data.
//
//   tpp-lab verify --all            check every theorem bound on the catalog
//   tpp-lab tables --table 2        reproduce a published data table
//   tpp-lab props                   run the lemma-level property suites
//   tpp-lab show "[32, 49]"         structure and classification of one row
//   tpp-lab search --label "[8, 3]" ad-hoc beta0 / beta search, JSON out
//
// Exit codes: 0 success, 1 violation/mismatch, 2 inconclusive, 3 usage/input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpplab/catalog.hpp"
#include "tpplab/classifier.hpp"
#include "tpplab/props.hpp"
#include "tpplab/report.hpp"
#include "tpplab/search.hpp"

using namespace tpplab;

namespace {

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GroupError(Err::IoError, "cannot write " + path);
  out << content;
}

// CLI11 expands a quoted "[32, 49]" into the tokens "32" and " 49"; stitch
// such digit pairs back into one label.
std::vector<std::string> join_label_tokens(const std::vector<std::string>& tokens) {
  auto trimmed = [](std::string t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    return t;
  };
  auto all_digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string cur = trimmed(tokens[i]);
    if (all_digits(cur) && i + 1 < tokens.size() && all_digits(trimmed(tokens[i + 1]))) {
      out.push_back(cur + "," + trimmed(tokens[i + 1]));
      ++i;
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

std::vector<std::string> expand_labels(const Catalog& cat, const std::vector<std::string>& labels,
                                       bool all, bool deep) {
  if (!all) return join_label_tokens(labels);
  std::vector<std::string> out;
  for (const auto& e : cat.entries())
    if (deep || !e.deep_only) out.push_back(e.label);
  return out;
}

int cmd_verify(const Catalog& cat, const std::vector<std::string>& labels, bool all,
               const VerifyOptions& options, const std::string& out_path) {
  auto selected = expand_labels(cat, labels, all, options.deep);
  if (selected.empty()) {
    std::cerr << "no groups selected; pass labels or --all\n";
    return 3;
  }
  VerifyOutcome outcome = run_verify(cat, selected, options);
  write_out(out_path, render_verify_text(outcome));
  return outcome.exit_code;
}

int cmd_tables(const Catalog& cat, int table_no, const std::string& format,
               const VerifyOptions& options, const std::string& out_path) {
  TableReport rep = reproduce_table(cat, table_no, options);
  write_out(out_path, render_table(rep, format));
  bool inconclusive = false;
  for (const auto& r : rep.rows) inconclusive = inconclusive || r.inconclusive;
  if (rep.any_mismatch) return 1;
  if (inconclusive && !options.allow_inconclusive) return 2;
  return 0;
}

int cmd_props(const Catalog& cat, const std::string& suite, std::uint64_t seed) {
  std::vector<PropOutcome> outcomes;
  if (suite.empty() || suite == "all")
    outcomes = run_all_prop_suites(cat, seed);
  else
    outcomes.push_back(run_prop_suite(suite, cat, seed));
  bool ok = true;
  for (const auto& o : outcomes) {
    std::cout << o.suite << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.checks
              << " checks)\n";
    for (const auto& f : o.failures) std::cout << "  witness: " << f << "\n";
    ok = ok && o.passed;
  }
  return ok ? 0 : 1;
}

int cmd_show(const Catalog& cat, const std::string& label, bool dump_lattice) {
  const CatalogEntry& entry = cat.find(label);
  GroupTable g = cat.build(entry);
  StructureCache st = compute_structure(g);
  GroupClassification cls = classify_group(g, st);
  cls.declared_cd = entry.declared_cd;

  std::cout << entry.label << "  (table " << entry.table_no << ", structure \""
            << entry.structure << "\", recipe " << entry.recipe_text << ")\n";
  std::cout << "order " << g.order() << ", |Z| " << st.center.size() << ", |G'| "
            << st.commutator.size() << ", Phi " << st.frattini.size() << ", class "
            << (st.nilpotency_class ? std::to_string(*st.nilpotency_class) : std::string("-"))
            << ", subgroups " << st.all_subgroups.size() << "\n";
  std::cout << "fingerprint " << fingerprint_of(g).str() << "\n";
  std::cout << "abelian " << cls.is_abelian;
  if (cls.p_group)
    std::cout << ", p-group p=" << cls.p_group->first << " n=" << cls.p_group->second;
  std::cout << ", cyclic G' of order p " << cls.cyclic_commutator_of_order_p << ", extraspecial "
            << cls.extraspecial << ", |G:Z| " << cls.centre_index << ", band "
            << cls.large_centre_band << ", abelian index-p " << cls.has_abelian_index_p_subgroup
            << ", cd{1,p} criterion " << cls.cd_one_p_criterion << "\n";
  for (const auto& b : predicted_bound(cls, g.order()))
    std::cout << "predicted " << b.theorem << ": " << b.describe() << "\n";
  if (dump_lattice) {
    for (const auto& h : st.all_subgroups) {
      nlohmann::json j = {{"size", h.size()}, {"members", h.members.to_indices()}};
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_search(const Catalog& cat, const std::string& label, const std::string& file,
               bool subsets, const SearchBudget& budget, const std::string& out_path) {
  GroupTable g;
  std::string name;
  if (!label.empty()) {
    g = cat.build(label);
    name = label;
  } else if (!file.empty()) {
    g = parse_group_or_generators(read_text_file(file));
    name = file;
  } else {
    std::cerr << "search needs --label or --file\n";
    return 3;
  }
  TppReport report = search_beta0(g, all_subgroups(g), budget);
  if (subsets) {
    TppReport sub = search_beta_subsets(g, budget);
    report.beta = sub.beta;
    report.rho = sub.rho;
    report.maximal_subset_triples = sub.maximal_subset_triples;
  }
  write_out(out_path, report_to_json(report, name) + "\n");
  return report.budget_exhausted ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group TPP capacity search and theorem verification"};
  app.require_subcommand(1);

  std::string catalog_dir = Catalog::default_dir();
  app.add_option("--catalog", catalog_dir, "catalog directory");

  std::vector<std::string> labels;
  bool all = false, deep = false, allow_inconclusive = false;
  std::uint64_t budget_candidates = 0;
  double budget_seconds = 0.0;
  std::string out_path;
  std::uint64_t seed = 12345;

  auto* verify = app.add_subcommand("verify", "check theorem bounds against computed rho0");
  verify->add_option("labels", labels, "catalog labels, e.g. \"[32, 49]\"");
  verify->add_flag("--all", all, "verify every catalog row");
  verify->add_flag("--deep", deep, "include deep-only (order-128) rows");
  verify->add_flag("--allow-inconclusive", allow_inconclusive,
                   "exit 0 even when budget-limited rows stay inconclusive");
  verify->add_option("--budget-candidates", budget_candidates, "max S,T,U candidates (0 = off)");
  verify->add_option("--budget-seconds", budget_seconds, "max seconds per group (0 = off)");
  verify->add_option("--out", out_path, "write the report to a file");

  int table_no = 1;
  std::string format = "md";
  auto* tables = app.add_subcommand("tables", "reproduce a published table's computable columns");
  tables->add_option("--table", table_no, "table number (1, 2 or 3)")->required();
  tables->add_option("--format", format, "md, csv or json");
  tables->add_flag("--deep", deep, "search deep-only rows too");
  tables->add_flag("--allow-inconclusive", allow_inconclusive, "exit 0 with '?' cells");
  tables->add_option("--budget-candidates", budget_candidates, "max candidates per group");
  tables->add_option("--budget-seconds", budget_seconds, "max seconds per group");
  tables->add_option("--out", out_path, "write the table to a file");

  std::string suite;
  auto* props = app.add_subcommand("props", "run lemma-level property suites");
  props->add_option("--suite", suite, "suite name (default: all)");
  props->add_option("--seed", seed, "RNG seed");

  std::string show_label;
  bool dump_lattice = false;
  auto* show = app.add_subcommand("show", "print structure and classification of one row");
  show->add_option("label", show_label, "catalog label")->required();
  show->add_flag("--lattice", dump_lattice, "dump the subgroup lattice as JSON lines");

  std::string search_label, search_file;
  bool subsets = false;
  auto* search = app.add_subcommand("search", "ad-hoc beta0/beta search with JSON output");
  search->add_option("--label", search_label, "catalog label");
  search->add_option("--file", search_file, "group-table or perm-gens file");
  search->add_flag("--subsets", subsets, "also run the subset (beta) search");
  search->add_option("--budget-candidates", budget_candidates, "max candidates");
  search->add_option("--budget-seconds", budget_seconds, "max seconds");
  search->add_option("--out", out_path, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    Catalog cat = Catalog::load(catalog_dir);
    VerifyOptions options;
    options.budget = {budget_candidates, budget_seconds};
    options.deep = deep;
    options.allow_inconclusive = allow_inconclusive;

    if (verify->parsed()) return cmd_verify(cat, labels, all, options, out_path);
    if (tables->parsed()) return cmd_tables(cat, table_no, format, options, out_path);
    if (props->parsed()) return cmd_props(cat, suite, seed);
    if (show->parsed()) return cmd_show(cat, show_label, dump_lattice);
    if (search->parsed())
      return cmd_search(cat, search_label, search_file, subsets, options.budget, out_path);
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
