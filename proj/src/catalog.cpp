#include "tpplab/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tpplab {

using nlohmann::json;

std::string Fingerprint::str() const {
  std::string h;
  for (auto [o, c] : order_histogram) {
    if (!h.empty()) h += ' ';
    h += std::to_string(o) + ":" + std::to_string(c);
  }
  return "order=" + std::to_string(order) + " z=" + std::to_string(center_order) +
         " comm=" + std::to_string(commutator_order) + " class=" +
         std::to_string(nilpotency_class) + " orders[" + h + "]";
}

Fingerprint fingerprint_of(const GroupTable& g) {
  Fingerprint f;
  f.order = g.order();
  f.center_order = unsigned(center(g).size());
  f.commutator_order = unsigned(commutator_subgroup(g).size());
  CentralSeries cs = upper_central_series(g);
  f.nilpotency_class = cs.nilpotency_class ? *cs.nilpotency_class : 0;
  f.order_histogram = element_order_histogram(g);
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(Err::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Catalog::default_dir() {
#ifdef TPPLAB_DEFAULT_CATALOG_DIR
  return TPPLAB_DEFAULT_CATALOG_DIR;
#else
  return "data/catalog";
#endif
}

namespace {

std::vector<std::pair<unsigned, unsigned>> parse_hist(const std::string& s) {
  std::vector<std::pair<unsigned, unsigned>> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw GroupError(Err::ParseError, "bad histogram token " + tok);
    out.emplace_back(unsigned(std::stoul(tok.substr(0, colon))),
                     unsigned(std::stoul(tok.substr(colon + 1))));
  }
  return out;
}

std::string hist_str(const std::vector<std::pair<unsigned, unsigned>>& h) {
  std::string s;
  for (auto [o, c] : h) {
    if (!s.empty()) s += ' ';
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  return s;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational::whole(std::stol(s));
  return Rational(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

}  // namespace

Catalog Catalog::load(const std::string& dir) {
  Catalog cat;
  cat.dir_ = dir;
  std::string text = read_text_file(dir + "/manifest.jsonl");
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw GroupError(Err::ParseError, "manifest line " + std::to_string(line_no));
    if (!saw_header) {
      if (j.value("catalog_version", "") != "tpp-catalog v1")
        throw GroupError(Err::ParseError, "unsupported catalog version");
      saw_header = true;
      continue;
    }
    CatalogEntry e;
    e.label = j.at("label").get<std::string>();
    e.table_no = j.at("table").get<int>();
    e.declared_order = j.at("order").get<unsigned>();
    e.declared_center_order = j.at("z").get<unsigned>();
    e.declared_centre_index = e.declared_order / e.declared_center_order;
    for (auto& d : j.at("cd")) e.declared_cd.insert(d.get<unsigned>());
    e.declared_rho0 = parse_rational(j.at("rho0").get<std::string>());
    e.structure = j.at("structure").get<std::string>();
    e.recipe_text = j.at("recipe").get<std::string>();
    e.recipe = parse_recipe(e.recipe_text);
    const json& fp = j.at("fingerprint");
    e.fingerprint.order = e.declared_order;
    e.fingerprint.center_order = fp.at("z").get<unsigned>();
    e.fingerprint.commutator_order = fp.at("comm").get<unsigned>();
    e.fingerprint.nilpotency_class = fp.at("class").get<unsigned>();
    e.fingerprint.order_histogram = parse_hist(fp.at("orders").get<std::string>());
    e.deep_only = j.value("deep", false);
    e.cd_discrepancy = j.value("cd_discrepancy", false);
    for (const auto& prev : cat.entries_)
      if (prev.label == e.label)
        throw GroupError(Err::DuplicateLabel, "duplicate catalog label " + e.label);
    cat.entries_.push_back(std::move(e));
  }
  if (!saw_header) throw GroupError(Err::ParseError, "empty catalog manifest");
  return cat;
}

std::string normalize_label(const std::string& label) {
  std::string out;
  for (char c : label)
    if (c != '[' && c != ']' && c != ' ' && c != '\t') out += c;
  return out;
}

bool Catalog::has(const std::string& label) const {
  std::string key = normalize_label(label);
  for (const auto& e : entries_)
    if (normalize_label(e.label) == key) return true;
  return false;
}

const CatalogEntry& Catalog::find(const std::string& label) const {
  std::string key = normalize_label(label);
  for (const auto& e : entries_)
    if (normalize_label(e.label) == key) return e;
  throw GroupError(Err::UnknownLabel, "no catalog entry " + label);
}

GroupTable Catalog::build(const std::string& label) const { return build(find(label)); }

GroupTable Catalog::build(const CatalogEntry& entry) const {
  GroupTable g = build_recipe(entry.recipe, dir_);
  Fingerprint got = fingerprint_of(g);
  auto mismatch = [&](const std::string& field, const std::string& expected,
                      const std::string& actual) {
    throw GroupError(Err::FingerprintMismatch, entry.label + ": " + field + " expected " +
                                                   expected + ", got " + actual);
  };
  if (got.order != entry.declared_order)
    mismatch("order", std::to_string(entry.declared_order), std::to_string(got.order));
  if (got.center_order != entry.declared_center_order)
    mismatch("|Z|", std::to_string(entry.declared_center_order),
             std::to_string(got.center_order));
  if (got.center_order != entry.fingerprint.center_order)
    mismatch("fingerprint |Z|", std::to_string(entry.fingerprint.center_order),
             std::to_string(got.center_order));
  if (got.commutator_order != entry.fingerprint.commutator_order)
    mismatch("|G'|", std::to_string(entry.fingerprint.commutator_order),
             std::to_string(got.commutator_order));
  if (got.nilpotency_class != entry.fingerprint.nilpotency_class)
    mismatch("class", std::to_string(entry.fingerprint.nilpotency_class),
             std::to_string(got.nilpotency_class));
  if (got.order_histogram != entry.fingerprint.order_histogram)
    mismatch("order histogram", hist_str(entry.fingerprint.order_histogram),
             hist_str(got.order_histogram));
  return g;
}

std::vector<std::pair<std::string, GroupTable>> ingest_export(const std::string& text) {
  std::vector<std::pair<std::string, GroupTable>> out;
  std::istringstream in(text);
  std::string line;
  std::string label;
  std::string body;
  auto flush = [&]() {
    if (label.empty()) return;
    for (const auto& [prev, g] : out)
      if (prev == label) throw GroupError(Err::DuplicateLabel, "duplicate label " + label);
    out.emplace_back(label, parse_group_or_generators(body));
    label.clear();
    body.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("@group ", 0) == 0) {
      flush();
      label = line.substr(7);
      if (label.empty()) throw GroupError(Err::ParseError, "empty label in export");
      continue;
    }
    if (label.empty()) {
      if (line.empty()) continue;
      throw GroupError(Err::ParseError, "content before first @group header");
    }
    if (body.empty() && line.empty()) continue;
    body += line;
    body += '\n';
  }
  flush();
  return out;
}

}  // namespace tpplab
