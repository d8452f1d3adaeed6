#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "tpplab/catalog.hpp"
#include "tpplab/classifier.hpp"
#include "tpplab/report.hpp"

using namespace tpplab;

TEST_CASE("catalog loads and covers the published tables") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  CHECK(cat.entries().size() >= 40);

  // one entry per row; all declared orders drawn from the published set
  std::set<unsigned> orders;
  for (const auto& e : cat.entries()) orders.insert(e.declared_order);
  CHECK(orders == std::set<unsigned>{8, 16, 24, 27, 32, 64, 128});

  CHECK_THROWS_AS(cat.find("[999, 1]"), GroupError);
}

TEST_CASE("catalog_build verifies fingerprints") {
  Catalog cat = Catalog::load(Catalog::default_dir());

  GroupTable d8 = cat.build("[8, 3]");
  CHECK(d8.order() == 8);
  CHECK(center(d8).size() == 2);

  GroupTable c3q8 = cat.build("[24, 11]");
  CHECK(c3q8.order() == 24);
  CHECK(center(c3q8).size() == 6);

  GroupTable g3228 = cat.build("[32, 28]");
  CHECK(g3228.order() == 32);
  CHECK(center(g3228).size() == 4);

  SUBCASE("building is deterministic byte-for-byte") {
    CHECK(serialize_group(cat.build("[27, 3]")) == serialize_group(cat.build("[27, 3]")));
    CHECK(serialize_group(cat.build("[32, 49]")) == serialize_group(cat.build("[32, 49]")));
  }
}

TEST_CASE("every catalog row builds with a matching fingerprint") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  for (const auto& e : cat.entries()) {
    CAPTURE(e.label);
    GroupTable g = cat.build(e);
    CHECK(g.order() == e.declared_order);
  }
}

TEST_CASE("ingest_export") {
  SUBCASE("empty input gives an empty list") {
    CHECK(ingest_export("").empty());
  }
  SUBCASE("a single C2 table") {
    auto groups = ingest_export("@group C2\ngroup-table v1\norder 2\n0 1\n1 0\n");
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].first == "C2");
    CHECK(groups[0].second.order() == 2);
  }
  SUBCASE("duplicate labels are rejected") {
    std::string text =
        "@group X\ngroup-table v1\norder 1\n0\n\n@group X\ngroup-table v1\norder 1\n0\n";
    CHECK_THROWS_AS(ingest_export(text), GroupError);
  }
  SUBCASE("the shipped export bundle parses and covers the catalog") {
    Catalog cat = Catalog::load(Catalog::default_dir());
    auto groups = ingest_export(read_text_file(cat.dir() + "/tables.export"));
    CHECK(groups.size() == cat.entries().size());
    CHECK(groups.size() >= 30);
    for (const auto& [label, g] : groups) {
      CAPTURE(label);
      CHECK(g.order() == cat.find(label).declared_order);
    }
  }
}

TEST_CASE("sqrt display is exact") {
  CHECK(sqrt_display_exact(4) == "2");
  CHECK(sqrt_display_exact(8) == "2√2");
  CHECK(sqrt_display_exact(16) == "4");
  CHECK(sqrt_display_exact(9) == "3");
  CHECK(sqrt_display_exact(2) == "√2");
  CHECK(sqrt_display_exact(12) == "2√3");
}

TEST_CASE("csv rendering round-trips through parse") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  VerifyOptions options;  // default budgets; table 3 is small
  TableReport rep = reproduce_table(cat, 3, options);
  REQUIRE(rep.rows.size() == 2);
  std::string csv = render_table(rep, "csv");
  auto rows = parse_table_csv(csv);
  REQUIRE(rows.size() == 3);  // header + 2 rows
  CHECK(rows[0][0] == "label");
  CHECK(rows[1][0] == "[27, 3]");
  CHECK(rows[2][0] == "[27, 4]");
  CHECK(rows[1][6] == "1");  // rho0 column
  CHECK(rows[2][6] == "1");
}

TEST_CASE("parse of serialize is the identity on every catalog group") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  for (const auto& e : cat.entries()) {
    CAPTURE(e.label);
    GroupTable g = cat.build(e);
    std::string text = serialize_group(g);
    CHECK(serialize_group(parse_group(text)) == text);
  }
}

TEST_CASE("table reports are byte-deterministic") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  VerifyOptions options;
  std::string a = render_table(reproduce_table(cat, 2, options), "csv");
  std::string b = render_table(reproduce_table(cat, 2, options), "csv");
  CHECK(a == b);
  VerifyOutcome va = run_verify(cat, {"[8, 3]", "[32, 49]"}, options);
  VerifyOutcome vb = run_verify(cat, {"[8, 3]", "[32, 49]"}, options);
  CHECK(render_verify_text(va) == render_verify_text(vb));
}

TEST_CASE("label normalization accepts bracketed and bare forms") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  CHECK(cat.find("[32, 49]").label == "[32, 49]");
  CHECK(cat.find("32,49").label == "[32, 49]");
  CHECK(cat.find("[32,49]").label == "[32, 49]");
}

TEST_CASE("order-27 rows: commutator subgroups and classification") {
  Catalog cat = Catalog::load(Catalog::default_dir());

  GroupTable he3 = cat.build("[27, 3]");
  ElementSet comm = commutator_subgroup(he3);
  CHECK(comm.size() == 3);
  CHECK(is_cyclic_subgroup(he3, comm.members));

  GroupTable m27 = cat.build("[27, 4]");
  StructureCache st = compute_structure(m27);
  GroupClassification c = classify_group(m27, st);
  CHECK(c.p_group == std::make_pair(3u, 3u));
  CHECK(c.nilpotency_class == 2u);
  CHECK(c.cyclic_commutator_of_order_p);
  CHECK(st.center.size() == 3);
}

TEST_CASE("the flagged cd discrepancy row warns without failing") {
  Catalog cat = Catalog::load(Catalog::default_dir());
  VerifyOptions options;
  BoundCheckResult r = verify_group(cat, cat.find("[32, 50]"), options);
  CHECK_FALSE(r.hard_failure);
  CHECK(r.matches_declared);
  REQUIRE(!r.discrepancies.empty());
  CHECK(r.discrepancies.front().find("known discrepancy") != std::string::npos);
  // and the unflagged rows have no cd discrepancies at all
  BoundCheckResult clean = verify_group(cat, cat.find("[32, 49]"), options);
  CHECK(clean.discrepancies.empty());
}

TEST_CASE("a declared-value mismatch fails verification with witness triples") {
  // tamper with one declared rho0 in a scratch copy of the catalog
  Catalog cat = Catalog::load(Catalog::default_dir());
  std::string dir = "/tmp/tampered_catalog";
  std::filesystem::create_directories(dir);
  for (const auto& entry : std::filesystem::directory_iterator(cat.dir()))
    std::filesystem::copy_file(entry.path(), dir + "/" + entry.path().filename().string(),
                               std::filesystem::copy_options::overwrite_existing);
  std::string manifest = read_text_file(dir + "/manifest.jsonl");
  std::string needle = "\"label\":\"[8, 3]\",\"order\":8,\"recipe\":\"dihedral(8)\",\"rho0\":\"1\"";
  std::string swapped = "\"label\":\"[8, 3]\",\"order\":8,\"recipe\":\"dihedral(8)\",\"rho0\":\"2\"";
  REQUIRE(manifest.find(needle) != std::string::npos);
  manifest.replace(manifest.find(needle), needle.size(), swapped);
  {
    std::ofstream out(dir + "/manifest.jsonl", std::ios::binary);
    out << manifest;
  }

  Catalog tampered = Catalog::load(dir);
  VerifyOptions options;
  VerifyOutcome outcome = run_verify(tampered, {"[8, 3]"}, options);
  CHECK(outcome.exit_code == 1);
  REQUIRE(outcome.results.size() == 1);
  CHECK_FALSE(outcome.results[0].matches_declared);
  CHECK(!outcome.results[0].witnesses.empty());  // mismatch is emitted with witnesses
  std::string text = render_verify_text(outcome);
  CHECK(text.find("MISMATCH") != std::string::npos);
  CHECK(text.find("witness") != std::string::npos);
}
